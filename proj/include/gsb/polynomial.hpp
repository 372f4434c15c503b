#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gsb/error.hpp"
#include "gsb/monoid.hpp"
#include "gsb/order.hpp"
#include "gsb/scalar.hpp"

namespace gsb {

  ////////////////////////////////////////////////////////////////////////
  // Text form of monomials
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::string letter_name(Signature const& sig, Side side, Letter l) {
      Alphabet const& a = side == Side::X ? sig.x : sig.y;
      if (l < a.size()) {
        return a.name(l);
      }
      return (side == Side::X ? "x" : "y") + std::to_string(l + 1);
    }

    inline void append_power(std::string&     out,
                             std::string const& name,
                             std::size_t      power) {
      if (!out.empty()) {
        out += '*';
      }
      out += name;
      if (power > 1) {
        out += '^' + std::to_string(power);
      }
    }
  }  // namespace detail

  // Runs of equal letters are written as powers: x1*x2^2.
  inline std::string to_string(Word const&      w,
                               Signature const& sig  = {},
                               Side             side = Side::X) {
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      detail::append_power(out, detail::letter_name(sig, side, w[i]), j - i);
      i = j;
    }
    return out.empty() ? "1" : out;
  }

  inline std::string to_string(CommMonomial const& m,
                               Signature const&    sig = {}) {
    std::string out;
    for (std::size_t i = 0; i < m.support_end(); ++i) {
      if (m.exponent(i) != 0) {
        detail::append_power(out,
                             detail::letter_name(sig, Side::X, Letter(i)),
                             m.exponent(i));
      }
    }
    return out.empty() ? "1" : out;
  }

  namespace detail {
    inline std::string join_parts(std::string x, std::string y) {
      if (y == "1") {
        return x;
      }
      if (x == "1") {
        return y;
      }
      return x + ";" + y;
    }
  }  // namespace detail

  inline std::string to_string(NormalWord const& u, Signature const& sig = {}) {
    return detail::join_parts(to_string(u.x, sig, Side::X),
                              to_string(u.y, sig, Side::Y));
  }

  inline std::string to_string(MixedMonomial const& u,
                               Signature const&     sig = {}) {
    return detail::join_parts(to_string(u.x, sig),
                              to_string(u.y, sig, Side::Y));
  }

  inline std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << to_string(w);
  }
  inline std::ostream& operator<<(std::ostream& os, CommMonomial const& m) {
    return os << to_string(m);
  }
  inline std::ostream& operator<<(std::ostream& os, NormalWord const& u) {
    return os << to_string(u);
  }
  inline std::ostream& operator<<(std::ostream& os, MixedMonomial const& u) {
    return os << to_string(u);
  }

  ////////////////////////////////////////////////////////////////////////
  // Polynomial
  ////////////////////////////////////////////////////////////////////////

  template <typename M>
  struct Term {
    Scalar coeff;
    M      mono;

    bool operator==(Term const&) const = default;
  };

  template <typename M>
  class Polynomial {
   public:
    using monomial_type = M;
    using order_type    = order_t<M>;

    Polynomial() = default;

    // The zero polynomial.
    Polynomial(Field field, order_type order) : field_(field), order_(order) {}

    static Polynomial normalize(Field                 field,
                                order_type            order,
                                std::vector<Term<M>>  terms) {
      std::unordered_map<M, std::size_t, MonomialHash> index;
      std::vector<Term<M>>                             merged;
      merged.reserve(terms.size());
      for (auto& t : terms) {
        if (t.coeff.characteristic() != field.characteristic()) {
          throw FieldMismatch();
        }
        auto [it, fresh] = index.try_emplace(t.mono, merged.size());
        if (fresh) {
          merged.push_back(std::move(t));
        } else {
          merged[it->second].coeff += t.coeff;
        }
      }
      std::erase_if(merged, [](Term<M> const& t) { return t.coeff.is_zero(); });
      std::sort(merged.begin(), merged.end(), [&order](auto const& a, auto const& b) {
        return order.compare(a.mono, b.mono) > 0;
      });
      Polynomial out(field, order);
      out.terms_ = std::move(merged);
      return out;
    }

    static Polynomial monomial(Field field, order_type order, M const& m) {
      return monomial(field, order, m, Scalar::one(field));
    }

    static Polynomial monomial(Field         field,
                               order_type    order,
                               M const&      m,
                               Scalar const& c) {
      Polynomial out(field, order);
      if (!c.is_zero()) {
        out.terms_.push_back({c, m});
      }
      return out;
    }

    Field field() const noexcept {
      return field_;
    }

    order_type const& order() const noexcept {
      return order_;
    }

    std::vector<Term<M>> const& terms() const noexcept {
      return terms_;
    }

    bool is_zero() const noexcept {
      return terms_.empty();
    }

    std::size_t size() const noexcept {
      return terms_.size();
    }

    Term<M> const& lead() const {
      if (terms_.empty()) {
        throw ZeroPolynomial();
      }
      return terms_.front();
    }

    M const& lead_monomial() const {
      return lead().mono;
    }

    Scalar const& lead_coeff() const {
      return lead().coeff;
    }

    bool is_monic() const {
      return !terms_.empty() && terms_.front().coeff.is_one();
    }

    Polynomial monic() const {
      Polynomial out = *this;
      if (!is_zero() && !is_monic()) {
        Scalar inv = lead_coeff().inverse();
        for (auto& t : out.terms_) {
          t.coeff *= inv;
        }
      }
      return out;
    }

    // Largest total degree of a term; 0 for the zero polynomial.
    std::size_t degree() const {
      std::size_t d = 0;
      for (auto const& t : terms_) {
        d = std::max(d, gsb::degree(t.mono));
      }
      return d;
    }

    bool is_homogeneous() const {
      for (auto const& t : terms_) {
        if (gsb::degree(t.mono) != gsb::degree(terms_.front().mono)) {
          return false;
        }
      }
      return true;
    }

    Scalar coefficient(M const& m) const {
      for (auto const& t : terms_) {
        if (t.mono == m) {
          return t.coeff;
        }
      }
      return Scalar::zero(field_);
    }

    Polynomial operator-() const {
      Polynomial out = *this;
      for (auto& t : out.terms_) {
        t.coeff = -t.coeff;
      }
      return out;
    }

    // Merge of two descending term sequences.
    Polynomial& operator+=(Polynomial const& g) {
      check_compatible(g);
      std::vector<Term<M>> out;
      out.reserve(terms_.size() + g.terms_.size());
      auto i = terms_.begin();
      auto j = g.terms_.begin();
      while (i != terms_.end() && j != g.terms_.end()) {
        auto c = order_.compare(i->mono, j->mono);
        if (c > 0) {
          out.push_back(std::move(*i++));
        } else if (c < 0) {
          out.push_back(*j++);
        } else {
          Scalar s = i->coeff + j->coeff;
          if (!s.is_zero()) {
            out.push_back({std::move(s), std::move(i->mono)});
          }
          ++i;
          ++j;
        }
      }
      std::move(i, terms_.end(), std::back_inserter(out));
      std::copy(j, g.terms_.end(), std::back_inserter(out));
      terms_ = std::move(out);
      return *this;
    }

    Polynomial& operator-=(Polynomial const& g) {
      return *this += -g;
    }

    Polynomial& operator*=(Scalar const& c) {
      if (c.characteristic() != field_.characteristic()) {
        throw FieldMismatch();
      }
      if (c.is_zero()) {
        terms_.clear();
      } else {
        for (auto& t : terms_) {
          t.coeff *= c;
        }
      }
      return *this;
    }

    friend Polynomial operator+(Polynomial f, Polynomial const& g) {
      return f += g;
    }
    friend Polynomial operator-(Polynomial f, Polynomial const& g) {
      return f -= g;
    }
    friend Polynomial operator*(Scalar const& c, Polynomial f) {
      return f *= c;
    }
    friend Polynomial operator*(Polynomial f, Scalar const& c) {
      return f *= c;
    }

    bool operator==(Polynomial const& g) const {
      check_compatible(g);
      return terms_ == g.terms_;
    }

    std::string to_string(Signature const& sig = {}) const {
      if (terms_.empty()) {
        return "0";
      }
      std::string out;
      bool        first = true;
      for (auto const& t : terms_) {
        Scalar      c   = t.coeff;
        bool const  neg = field_.is_rational() && sgn(c.rational()) < 0;
        if (neg) {
          c = -c;
        }
        if (first) {
          out += neg ? "-" : "";
        } else {
          out += neg ? " - " : " + ";
        }
        first = false;
        std::string const m = gsb::to_string(t.mono, sig);
        if (m == "1") {
          out += c.to_string();
        } else if (c.is_one()) {
          out += m;
        } else {
          out += c.to_string() + "*" + m;
        }
      }
      return out;
    }

    friend std::ostream& operator<<(std::ostream& os, Polynomial const& f) {
      return os << f.to_string();
    }

    void check_compatible(Polynomial const& g) const {
      if (field_ != g.field_) {
        throw FieldMismatch();
      }
      if (!(order_ == g.order_)) {
        throw OrderMismatch();
      }
    }

   private:
    template <typename N>
    friend Polynomial<N> mono_mul(N const&, Polynomial<N> const&, N const&);

    Field                field_;
    order_type           order_;
    std::vector<Term<M>> terms_;
  };

  // a f b, termwise. Monomial orders keep the terms strictly descending.
  template <typename M>
  Polynomial<M> mono_mul(M const& a, Polynomial<M> const& f, M const& b) {
    Polynomial<M> out(f.field(), f.order());
    out.terms_.reserve(f.size());
    for (auto const& t : f.terms()) {
      out.terms_.push_back({t.coeff, mul(a, t.mono, b)});
    }
    return out;
  }

  template <typename M>
  Polynomial<M> scalar_mul(Scalar const& c, Polynomial<M> const& f) {
    return c * f;
  }

  // Re-sort the terms of f under another order on the same universe.
  template <typename M>
  Polynomial<M> reorder(Polynomial<M> const& f, order_t<M> const& order) {
    return Polynomial<M>::normalize(f.field(), order, f.terms());
  }

}  // namespace gsb
