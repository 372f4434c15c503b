#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gsb/error.hpp"
#include "gsb/monoid.hpp"
#include "gsb/order.hpp"
#include "gsb/polynomial.hpp"
#include "gsb/rewrite.hpp"

namespace gsb {

  // Brute-force linear algebra on the span of { a s b : deg(a lead(s) b) <= d }.
  // Columns are monomials in descending order, so the pivot of a row is its
  // leading monomial. Over Q rows are primitive integer vectors reduced
  // fraction-free; over F_p rows are monic.

  namespace detail {
    struct IntegerRows {
      using coeff = mpz_class;
      using Row   = std::vector<std::pair<std::uint32_t, mpz_class>>;

      static void normalize(Row& r) {
        mpz_class g = 0;
        for (auto const& [c, v] : r) {
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
        if (sgn(r.front().second) < 0) {
          g = -g;
        }
        if (g != 1) {
          for (auto& [c, v] : r) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
          }
        }
      }

      // r <- lc(p) r - lc(r) p; both share the leading column.
      static void eliminate(Row& r, Row const& p) {
        mpz_class const a = p.front().second;
        mpz_class const b = r.front().second;
        Row             out;
        out.reserve(r.size() + p.size());
        std::size_t i = 0, j = 0;
        while (i < r.size() || j < p.size()) {
          if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
          } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
          } else {
            mpz_class v = a * r[i].second - b * p[j].second;
            if (v != 0) {
              out.emplace_back(r[i].first, std::move(v));
            }
            ++i;
            ++j;
          }
        }
        r = std::move(out);
        if (!r.empty()) {
          normalize(r);
        }
      }
    };

    struct ModularRows {
      using Row = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
      std::uint64_t p;

      std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
      }

      std::uint64_t inv(std::uint64_t x) const {
        std::uint64_t result = 1, e = p - 2;
        while (e > 0) {
          if (e & 1) {
            result = mulmod(result, x);
          }
          x = mulmod(x, x);
          e >>= 1;
        }
        return result;
      }

      void normalize(Row& r) const {
        if (r.front().second != 1) {
          std::uint64_t const s = inv(r.front().second);
          for (auto& [c, v] : r) {
            v = mulmod(v, s);
          }
        }
      }

      // r <- r - lc(r) p with p monic.
      void eliminate(Row& r, Row const& q) const {
        std::uint64_t const b = r.front().second;
        Row                 out;
        out.reserve(r.size() + q.size());
        std::size_t i = 0, j = 0;
        while (i < r.size() || j < q.size()) {
          if (j == q.size() || (i < r.size() && r[i].first < q[j].first)) {
            out.push_back(r[i++]);
          } else if (i == r.size() || q[j].first < r[i].first) {
            out.emplace_back(q[j].first, (p - mulmod(b, q[j].second)) % p);
            ++j;
          } else {
            std::uint64_t v = (r[i].second + p - mulmod(b, q[j].second)) % p;
            if (v != 0) {
              out.emplace_back(r[i].first, v);
            }
            ++i;
            ++j;
          }
        }
        r = std::move(out);
        if (!r.empty()) {
          normalize(r);
        }
      }
    };

    template <typename Backend>
    class Echelon {
     public:
      using Row = typename Backend::Row;

      explicit Echelon(Backend b = {}) : backend_(std::move(b)) {}

      // Reduces r by the pivots; returns true when it reduces to zero.
      bool reduce(Row& r) const {
        while (!r.empty()) {
          auto it = pivots_.find(r.front().first);
          if (it == pivots_.end()) {
            return false;
          }
          backend_.eliminate(r, rows_[it->second]);
        }
        return true;
      }

      void insert(Row r) {
        if (r.empty()) {
          return;
        }
        backend_.normalize(r);
        if (!reduce(r)) {
          pivots_.emplace(r.front().first, rows_.size());
          rows_.push_back(std::move(r));
        }
      }

      std::vector<std::uint32_t> pivot_columns() const {
        std::vector<std::uint32_t> out;
        for (auto const& [c, i] : pivots_) {
          out.push_back(c);
        }
        return out;
      }

      std::size_t rank() const {
        return rows_.size();
      }

      Backend const& backend() const {
        return backend_;
      }

     private:
      Backend                                       backend_;
      std::vector<Row>                              rows_;
      std::unordered_map<std::uint32_t, std::size_t> pivots_;
    };

    // Pairs (a, b) of total degree exactly k usable as a s b.
    inline std::vector<std::pair<Word, Word>> multipliers(Word const*,
                                                          Signature const& sig,
                                                          std::size_t      k) {
      std::vector<std::pair<Word, Word>> out;
      for (std::size_t i = 0; i <= k; ++i) {
        for (auto const& a : all_words(sig.x.size(), i)) {
          for (auto const& b : all_words(sig.x.size(), k - i)) {
            out.emplace_back(a, b);
          }
        }
      }
      return out;
    }

    inline std::vector<std::pair<CommMonomial, CommMonomial>>
    multipliers(CommMonomial const*, Signature const& sig, std::size_t k) {
      std::vector<std::pair<CommMonomial, CommMonomial>> out;
      for (auto& a : comm_monomials(sig.x.size(), k)) {
        out.emplace_back(std::move(a), CommMonomial());
      }
      return out;
    }

    inline std::vector<std::pair<NormalWord, NormalWord>>
    multipliers(NormalWord const*, Signature const& sig, std::size_t k) {
      std::vector<std::pair<NormalWord, NormalWord>> out;
      // X letters i, Y letters k - i, each split between left and right.
      for (std::size_t i = 0; i <= k; ++i) {
        auto const xs = multipliers(static_cast<Word const*>(nullptr), sig, i);
        Signature  ysig;
        ysig.x = sig.y;
        auto const ys = multipliers(static_cast<Word const*>(nullptr), ysig, k - i);
        for (auto const& [ax, bx] : xs) {
          for (auto const& [ay, by] : ys) {
            out.push_back({NormalWord{ax, ay}, NormalWord{bx, by}});
          }
        }
      }
      return out;
    }

    inline std::vector<std::pair<MixedMonomial, MixedMonomial>>
    multipliers(MixedMonomial const*, Signature const& sig, std::size_t k) {
      std::vector<std::pair<MixedMonomial, MixedMonomial>> out;
      for (std::size_t i = 0; i <= k; ++i) {
        Signature ysig;
        ysig.x        = sig.y;
        auto const ys = multipliers(static_cast<Word const*>(nullptr), ysig, k - i);
        for (auto const& u : comm_monomials(sig.x.size(), i)) {
          for (auto const& [ay, by] : ys) {
            out.push_back({MixedMonomial{u, ay}, MixedMonomial{CommMonomial(), by}});
          }
        }
      }
      return out;
    }

    inline mpz_class binomial(std::size_t n, std::size_t k) {
      mpz_class r;
      mpz_bin_uiui(r.get_mpz_t(), n, k);
      return r;
    }

    // Number of monomials of degree k in each universe.
    inline mpz_class monomial_count(Word const*, Signature const& sig, std::size_t k) {
      mpz_class r;
      mpz_ui_pow_ui(r.get_mpz_t(), sig.x.size(), k);
      return r;
    }
    inline mpz_class monomial_count(CommMonomial const*,
                                    Signature const& sig,
                                    std::size_t      k) {
      std::size_t const n = sig.x.size();
      if (n == 0) {
        return k == 0 ? 1 : 0;
      }
      return binomial(n + k - 1, k);
    }
    inline mpz_class monomial_count(NormalWord const*,
                                    Signature const& sig,
                                    std::size_t      k) {
      mpz_class total = 0;
      for (std::size_t i = 0; i <= k; ++i) {
        mpz_class a, b;
        mpz_ui_pow_ui(a.get_mpz_t(), sig.x.size(), i);
        mpz_ui_pow_ui(b.get_mpz_t(), sig.y.size(), k - i);
        total += a * b;
      }
      return total;
    }
    inline mpz_class monomial_count(MixedMonomial const*,
                                    Signature const& sig,
                                    std::size_t      k) {
      mpz_class total = 0;
      Signature xs;
      xs.x = sig.x;
      for (std::size_t i = 0; i <= k; ++i) {
        mpz_class b;
        mpz_ui_pow_ui(b.get_mpz_t(), sig.y.size(), k - i);
        total += monomial_count(static_cast<CommMonomial const*>(nullptr), xs, i) * b;
      }
      return total;
    }
  }  // namespace detail

  template <typename M>
  inline mpz_class monomial_count(Signature const& sig, std::size_t k) {
    return detail::monomial_count(static_cast<M const*>(nullptr), sig, k);
  }

  template <typename M>
  class IdealSlice {
   public:
    IdealSlice(std::vector<Polynomial<M>> const& S,
               Signature const&                  sig,
               Field                             field,
               order_t<M> const&                 order,
               std::size_t                       d)
        : sig_(sig), field_(field), order_(order), d_(d) {
      std::vector<std::vector<Term<M>>> rows;
      for (auto const& s : S) {
        if (s.is_zero()) {
          continue;
        }
        std::size_t const ds = degree(s.lead_monomial());
        for (std::size_t k = 0; ds + k <= d; ++k) {
          for (auto const& [a, b] : detail::multipliers(static_cast<M const*>(nullptr), sig, k)) {
            std::vector<Term<M>> row;
            row.reserve(s.size());
            for (auto const& t : s.terms()) {
              row.push_back({t.coeff, mul(a, t.mono, b)});
            }
            rows.push_back(std::move(row));
          }
        }
      }
      // Column order: every monomial of degree <= d, plus any larger one
      // occurring in a row, descending.
      std::unordered_map<M, std::uint32_t, MonomialHash> seen;
      for (auto const& row : rows) {
        for (auto const& t : row) {
          seen.emplace(t.mono, 0);
        }
      }
      columns_.reserve(seen.size());
      for (auto const& [m, i] : seen) {
        columns_.push_back(m);
      }
      std::sort(columns_.begin(), columns_.end(), OrderGreater<M>{order});
      for (std::uint32_t i = 0; i < columns_.size(); ++i) {
        index_[columns_[i]] = i;
      }
      if (field.is_rational()) {
        for (auto const& row : rows) {
          integer_.insert(integer_row(row));
        }
      } else {
        modular_ = detail::Echelon<detail::ModularRows>(
            detail::ModularRows{field.characteristic()});
        for (auto const& row : rows) {
          modular_.insert(modular_row(row));
        }
      }
    }

    std::size_t degree_bound() const {
      return d_;
    }

    std::size_t rank() const {
      return field_.is_rational() ? integer_.rank() : modular_.rank();
    }

    bool member(Polynomial<M> const& f) const {
      if (f.is_zero()) {
        return true;
      }
      std::size_t df = 0;
      for (auto const& t : f.terms()) {
        df = std::max(df, degree(t.mono));
      }
      if (df > d_) {
        throw DegreeOutOfBound(df, d_);
      }
      for (auto const& t : f.terms()) {
        if (index_.find(t.mono) == index_.end()) {
          return false;
        }
      }
      if (field_.is_rational()) {
        auto r = integer_row(f.terms());
        detail::IntegerRows::normalize(r);
        return integer_.reduce(r);
      }
      auto r = modular_row(f.terms());
      modular_.backend().normalize(r);
      return modular_.reduce(r);
    }

    // dims[k] = (monomials of degree k) - (pivots with leading degree k).
    std::vector<mpz_class> quotient_dims() const {
      std::vector<mpz_class> dims;
      for (std::size_t k = 0; k <= d_; ++k) {
        dims.push_back(monomial_count<M>(sig_, k));
      }
      auto const pivots = field_.is_rational() ? integer_.pivot_columns()
                                               : modular_.pivot_columns();
      for (auto c : pivots) {
        std::size_t const k = degree(columns_[c]);
        if (k <= d_) {
          dims[k] -= 1;
        }
      }
      return dims;
    }

   private:
    template <typename Terms>
    detail::IntegerRows::Row integer_row(Terms const& terms) const {
      mpz_class den = 1;
      for (auto const& t : terms) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
      }
      detail::IntegerRows::Row r;
      for (auto const& t : terms) {
        mpq_class const& q = t.coeff.rational();
        mpz_class        v = q.get_num() * (den / q.get_den());
        if (v != 0) {
          r.emplace_back(index_.at(t.mono), std::move(v));
        }
      }
      sort_row(r);
      return r;
    }

    template <typename Terms>
    detail::ModularRows::Row modular_row(Terms const& terms) const {
      detail::ModularRows::Row r;
      for (auto const& t : terms) {
        if (t.coeff.residue() != 0) {
          r.emplace_back(index_.at(t.mono), t.coeff.residue());
        }
      }
      sort_row(r);
      return r;
    }

    template <typename Row>
    static void sort_row(Row& r) {
      std::sort(r.begin(), r.end(), [](auto const& x, auto const& y) {
        return x.first < y.first;
      });
    }

    Signature                                          sig_;
    Field                                              field_;
    order_t<M>                                         order_;
    std::size_t                                        d_;
    std::vector<M>                                     columns_;
    std::unordered_map<M, std::uint32_t, MonomialHash> index_;
    detail::Echelon<detail::IntegerRows>               integer_;
    detail::Echelon<detail::ModularRows>               modular_{detail::ModularRows{2}};
  };

  template <typename M>
  bool member(Polynomial<M> const&              f,
              std::vector<Polynomial<M>> const& S,
              Signature const&                  sig,
              std::size_t                       d) {
    return IdealSlice<M>(S, sig, f.field(), f.order(), d).member(f);
  }

  template <typename M>
  std::vector<mpz_class> quotient_dim(std::vector<Polynomial<M>> const& S,
                                      Signature const&                  sig,
                                      Field                             field,
                                      order_t<M> const&                 order,
                                      std::size_t                       d) {
    return IdealSlice<M>(S, sig, field, order, d).quotient_dims();
  }

  // Whether some lead(s) divides lead(f).
  template <typename M>
  bool leading_divisibility(Polynomial<M> const&              f,
                            std::vector<Polynomial<M>> const& S) {
    M const& lf = f.lead_monomial();
    for (auto const& s : S) {
      if (!s.is_zero() && divides(s.lead_monomial(), lf)) {
        return true;
      }
    }
    return false;
  }

}  // namespace gsb
