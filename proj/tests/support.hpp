#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gsb/gsb.hpp"

namespace gsb::testing {

  using Rng = std::mt19937_64;

  inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  inline Scalar random_scalar(Rng& rng, Field field, bool nonzero = true) {
    while (true) {
      long const num = static_cast<long>(uniform(rng, 0, 10)) - 5;
      long const den = static_cast<long>(uniform(rng, 1, 3));
      Scalar s = Scalar(field, num) / Scalar(field, den);
      if (!nonzero || !s.is_zero()) {
        return s;
      }
    }
  }

  inline Word random_word(Rng& rng, std::size_t n, std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len && n > 0; ++i) {
      w.push_back(static_cast<Letter>(uniform(rng, 0, n - 1)));
    }
    return w;
  }

  // A random monomial of degree exactly k (or lower when an alphabet is
  // empty).
  inline Word random_monomial(Rng& rng, Signature const& sig, std::size_t k, Word const*) {
    return random_word(rng, sig.x.size(), k);
  }
  inline CommMonomial random_monomial(Rng&             rng,
                                      Signature const& sig,
                                      std::size_t      k,
                                      CommMonomial const*) {
    return gamma(random_word(rng, sig.x.size(), k));
  }
  inline std::size_t x_share(Rng& rng, Signature const& sig, std::size_t k) {
    if (sig.y.size() == 0) {
      return k;
    }
    if (sig.x.size() == 0) {
      return 0;
    }
    return uniform(rng, 0, k);
  }
  inline NormalWord random_monomial(Rng&             rng,
                                    Signature const& sig,
                                    std::size_t      k,
                                    NormalWord const*) {
    std::size_t const i = x_share(rng, sig, k);
    return NormalWord{random_word(rng, sig.x.size(), i),
                      random_word(rng, sig.y.size(), k - i)};
  }
  inline MixedMonomial random_monomial(Rng&             rng,
                                       Signature const& sig,
                                       std::size_t      k,
                                       MixedMonomial const*) {
    std::size_t const i = x_share(rng, sig, k);
    return MixedMonomial{gamma(random_word(rng, sig.x.size(), i)),
                         random_word(rng, sig.y.size(), k - i)};
  }

  template <typename M>
  M random_monomial(Rng& rng, Signature const& sig, std::size_t k) {
    return random_monomial(rng, sig, k, static_cast<M const*>(nullptr));
  }

  template <typename M>
  M random_monomial_upto(Rng& rng, Signature const& sig, std::size_t max_deg) {
    return random_monomial<M>(rng, sig, uniform(rng, 0, max_deg));
  }

  // Random polynomial; homogeneous of degree `deg` when `homogeneous`.
  template <typename M>
  Polynomial<M> random_polynomial(Rng&              rng,
                                  Field             field,
                                  order_t<M> const& order,
                                  Signature const&  sig,
                                  std::size_t       terms,
                                  std::size_t       deg,
                                  bool              homogeneous = false) {
    std::vector<Term<M>> ts;
    for (std::size_t i = 0; i < terms; ++i) {
      std::size_t const k = homogeneous ? deg : uniform(rng, 0, deg);
      ts.push_back({random_scalar(rng, field), random_monomial<M>(rng, sig, k)});
    }
    return Polynomial<M>::normalize(field, order, std::move(ts));
  }

  // sum of alpha a s b over random s in S, with deg(a lead(s) b) <= max_deg.
  template <typename M>
  Polynomial<M> random_member(Rng&                              rng,
                              std::vector<Polynomial<M>> const& S,
                              Field                             field,
                              order_t<M> const&                 order,
                              Signature const&                  sig,
                              std::size_t                       max_deg,
                              std::size_t                       summands,
                              bool                              homogeneous = false) {
    Polynomial<M> out(field, order);
    std::size_t   target = uniform(rng, 0, max_deg);
    for (std::size_t k = 0; k < summands; ++k) {
      auto const&       s  = S[uniform(rng, 0, S.size() - 1)];
      std::size_t const ds = degree(s.lead_monomial());
      if (ds > max_deg) {
        continue;
      }
      std::size_t const room = homogeneous ? (target >= ds ? target - ds : 0)
                                           : uniform(rng, 0, max_deg - ds);
      if (homogeneous && target < ds) {
        target = ds;
      }
      std::size_t const la = uniform(rng, 0, room);
      M const           a  = random_monomial<M>(rng, sig, la);
      M const           b  = random_monomial<M>(rng, sig, room - la);
      out += random_scalar(rng, field) * mono_mul(a, s, b);
    }
    return out;
  }

  // Pure X (or pure Y) homogeneous-or-not polynomials in the tensor universe.
  inline Polynomial<NormalWord> embed_x(Polynomial<Word> const& f,
                                        TensorOrder const&      order) {
    std::vector<Term<NormalWord>> ts;
    for (auto const& t : f.terms()) {
      ts.push_back({t.coeff, NormalWord{t.mono, Word()}});
    }
    return Polynomial<NormalWord>::normalize(f.field(), order, std::move(ts));
  }
  inline Polynomial<NormalWord> embed_y(Polynomial<Word> const& f,
                                        TensorOrder const&      order) {
    std::vector<Term<NormalWord>> ts;
    for (auto const& t : f.terms()) {
      ts.push_back({t.coeff, NormalWord{Word(), t.mono}});
    }
    return Polynomial<NormalWord>::normalize(f.field(), order, std::move(ts));
  }

  // T = { y x - x y : x in X, y in Y } in k<X> (x) k<Y> is zero there; in
  // the free algebra on X u Y (X letters first) it is the set below.
  inline std::vector<Polynomial<Word>> swap_relations(Field            field,
                                                      FreeOrder const& order,
                                                      std::size_t      nx,
                                                      std::size_t      ny) {
    std::vector<Polynomial<Word>> out;
    for (std::size_t j = 0; j < ny; ++j) {
      for (std::size_t i = 0; i < nx; ++i) {
        Letter const x = static_cast<Letter>(i), y = static_cast<Letter>(nx + j);
        out.push_back(Polynomial<Word>::normalize(
            field,
            order,
            {{Scalar::one(field), Word{y, x}}, {-Scalar::one(field), Word{x, y}}}));
      }
    }
    return out;
  }

  inline Signature numbered(std::size_t nx, std::size_t ny = 0) {
    Signature sig;
    sig.x = Alphabet::numbered(Side::X, nx);
    sig.y = Alphabet::numbered(Side::Y, ny);
    return sig;
  }

  // Free alphabet x1..xn, y1..ym as one ordered alphabet.
  inline Signature free_union(std::size_t nx, std::size_t ny) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= nx; ++i) {
      names.push_back("x" + std::to_string(i));
    }
    for (std::size_t j = 1; j <= ny; ++j) {
      names.push_back("y" + std::to_string(j));
    }
    Signature sig;
    sig.x = Alphabet(Side::X, names);
    return sig;
  }

  // Parses `text` as a polynomial over `sig` in the given field and order.
  template <typename M>
  Polynomial<M> poly(std::string const& text,
                     Signature const&   sig,
                     order_t<M> const&  order = {},
                     Field              field = Field::rationals()) {
    Presentation p;
    p.field = field;
    p.sig   = sig;
    if constexpr (std::is_same_v<M, Word>) {
      p.free_order = order;
    } else if constexpr (std::is_same_v<M, CommMonomial>) {
      p.comm_order = order;
    } else if constexpr (std::is_same_v<M, NormalWord>) {
      p.tensor_order = order;
    } else {
      p.mixed_order = order;
    }
    return parse_polynomial<M>(p, text);
  }

}  // namespace gsb::testing
