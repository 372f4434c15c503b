#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gsb/error.hpp"
#include "gsb/monoid.hpp"
#include "gsb/order.hpp"
#include "gsb/polynomial.hpp"
#include "gsb/rewrite.hpp"

namespace gsb {

  // gamma and delta on monomials live in monoid.hpp; these are the linear
  // extensions.

  inline Polynomial<CommMonomial> gamma(Polynomial<Word> const& f,
                                        CommOrder const&        order) {
    std::vector<Term<CommMonomial>> terms;
    for (auto const& t : f.terms()) {
      terms.push_back({t.coeff, gamma(t.mono)});
    }
    return Polynomial<CommMonomial>::normalize(f.field(), order, std::move(terms));
  }

  inline Polynomial<MixedMonomial> gamma_tensor(Polynomial<NormalWord> const& f,
                                                MixedOrder const&             order) {
    std::vector<Term<MixedMonomial>> terms;
    for (auto const& t : f.terms()) {
      terms.push_back({t.coeff, gamma(t.mono)});
    }
    return Polynomial<MixedMonomial>::normalize(f.field(), order, std::move(terms));
  }

  inline Polynomial<Word> delta(Polynomial<CommMonomial> const& f,
                                FreeOrder const&                order) {
    std::vector<Term<Word>> terms;
    for (auto const& t : f.terms()) {
      terms.push_back({t.coeff, delta(t.mono)});
    }
    return Polynomial<Word>::normalize(f.field(), order, std::move(terms));
  }

  inline Polynomial<NormalWord> delta_tensor(Polynomial<MixedMonomial> const& f,
                                             TensorOrder const&               order) {
    std::vector<Term<NormalWord>> terms;
    for (auto const& t : f.terms()) {
      terms.push_back({t.coeff, delta(t.mono)});
    }
    return Polynomial<NormalWord>::normalize(f.field(), order, std::move(terms));
  }

  // Monomials of degree <= cap in the variables strictly between the
  // smallest and largest variable of m, ascending under `order`.
  inline std::vector<CommMonomial> u_set(CommMonomial const& m,
                                         std::size_t         cap,
                                         CommOrder const&    order = {}) {
    std::vector<CommMonomial> out{CommMonomial()};
    auto lo = m.min_variable();
    auto hi = m.max_variable();
    if (!lo || *hi <= *lo + 1) {
      return out;
    }
    std::size_t const first = *lo + 1;
    std::size_t const n     = *hi - first;
    for (std::size_t d = 1; d <= cap; ++d) {
      for (auto const& e : comm_monomials(n, d)) {
        std::vector<std::uint32_t> exps(first, 0);
        exps.insert(exps.end(), e.exponents().begin(), e.exponents().end());
        out.emplace_back(std::move(exps));
      }
    }
    std::sort(out.begin(), out.end(), [&order](auto const& a, auto const& b) {
      return order.compare(a, b) < 0;
    });
    return out;
  }

  inline bool has_interior(CommMonomial const& m) {
    auto lo = m.min_variable();
    auto hi = m.max_variable();
    return lo && *hi > *lo + 1;
  }

  struct LiftConfig {
    // Largest degree of a lifted relation delta(u s).
    std::size_t      cap = 6;
    // Bounds for verifying the input; max_degree is raised to at least cap.
    CompletionConfig verify;
  };

  template <typename M>
  struct LiftResult {
    std::vector<Polynomial<M>> relations;
    std::size_t                commutators = 0;
    std::vector<std::string>   warnings;
  };

  // x_i x_j - x_j x_i for i > j.
  inline std::vector<Polynomial<Word>> commutators(Field            field,
                                                   FreeOrder const& order,
                                                   std::size_t      n) {
    std::vector<Polynomial<Word>> out;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Letter const a = static_cast<Letter>(i), b = static_cast<Letter>(j);
        out.push_back(Polynomial<Word>::normalize(
            field,
            order,
            {{Scalar::one(field), Word{a, b}}, {-Scalar::one(field), Word{b, a}}}).monic());
      }
    }
    return out;
  }

  inline std::vector<Polynomial<NormalWord>>
  tensor_commutators(Field field, TensorOrder const& order, std::size_t n) {
    std::vector<Polynomial<NormalWord>> out;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Letter const a = static_cast<Letter>(i), b = static_cast<Letter>(j);
        out.push_back(Polynomial<NormalWord>::normalize(
                          field,
                          order,
                          {{Scalar::one(field), NormalWord{Word{a, b}, {}}},
                           {-Scalar::one(field), NormalWord{Word{b, a}, {}}}})
                          .monic());
      }
    }
    return out;
  }

  namespace detail {
    template <typename M>
    void require_minimal(std::vector<Polynomial<M>> const& S, Signature const& sig) {
      for (auto const& s : S) {
        if (s.is_zero()) {
          throw ZeroInput();
        }
        if (!s.is_monic()) {
          throw NotMinimal("element " + s.to_string(sig) + " is not monic");
        }
      }
      if (auto p = non_minimal_pair(S)) {
        throw NotMinimal("leading monomial of s_" + std::to_string(p->second)
                         + " (" + to_string(S[p->second].lead_monomial(), sig)
                         + ") divides that of s_" + std::to_string(p->first) + " ("
                         + to_string(S[p->first].lead_monomial(), sig) + ")");
      }
    }

    template <typename M>
    void require_groebner(std::vector<Polynomial<M>> const& S,
                          Field                             field,
                          order_t<M> const&                 order,
                          Signature const&                  sig,
                          CompletionConfig                  cfg) {
      if (S.empty()) {
        return;
      }
      auto st = check(S, field, order, sig, std::move(cfg));
      if (!st.failures.empty()) {
        throw NotGroebner("input is not closed under compositions: "
                          + st.failures.front());
      }
    }

    inline std::string truncation_warning(std::size_t         index,
                                          CommMonomial const& lead,
                                          std::size_t         cap,
                                          Signature const&    sig) {
      return "warning: U(" + to_string(lead, sig) + ") for s_"
             + std::to_string(index) + " truncated at degree cap "
             + std::to_string(cap);
    }
  }  // namespace detail

  // S' = { delta(u s) : s in S, u in U(lead s), deg(u lead s) <= cap } plus
  // the commutators, in k<X> under the eps-lift order built on S's order.
  inline LiftResult<Word> eps_lift(std::vector<Polynomial<CommMonomial>> const& S,
                                   Field                                        field,
                                   CommOrder const&                             order,
                                   Signature const&                             sig,
                                   LiftConfig                                   cfg = {}) {
    detail::require_minimal(S, sig);
    CompletionConfig verify = cfg.verify;
    verify.log              = nullptr;
    verify.max_degree       = std::max<std::size_t>(verify.max_degree, 64);
    detail::require_groebner(S, field, order, sig, verify);

    FreeOrder const  eps = FreeOrder::eps(order);
    LiftResult<Word> out;
    out.relations   = commutators(field, eps, sig.x.size());
    out.commutators = out.relations.size();
    for (std::size_t k = 0; k < S.size(); ++k) {
      CommMonomial const& lead = S[k].lead_monomial();
      std::size_t const   dl   = lead.degree();
      if (dl > cfg.cap) {
        out.warnings.push_back("warning: s_" + std::to_string(k)
                               + " exceeds the degree cap "
                               + std::to_string(cfg.cap));
        continue;
      }
      if (has_interior(lead)) {
        out.warnings.push_back(detail::truncation_warning(k, lead, cfg.cap, sig));
      }
      for (auto const& u : u_set(lead, cfg.cap - dl, order)) {
        out.relations.push_back(
            delta(mono_mul(u, S[k], CommMonomial()), eps));
      }
    }
    return out;
  }

  // S' = { (delta x 1)(u s) : s in S, u in U(lead(s)^X) } plus the
  // commutators, in k<X> (x) k<Y> under the lifted tensor order.
  inline LiftResult<NormalWord>
  tensor_lift(std::vector<Polynomial<MixedMonomial>> const& S,
              Field                                         field,
              MixedOrder const&                             order,
              Signature const&                              sig,
              LiftConfig                                    cfg = {}) {
    detail::require_minimal(S, sig);
    CompletionConfig verify = cfg.verify;
    verify.log              = nullptr;
    verify.max_degree       = std::max(verify.max_degree, cfg.cap);
    detail::require_groebner(S, field, order, sig, verify);

    TensorOrder const      lifted = TensorOrder::lifted(order.x_order(), order.y_order());
    LiftResult<NormalWord> out;
    out.relations   = tensor_commutators(field, lifted, sig.x.size());
    out.commutators = out.relations.size();
    for (std::size_t k = 0; k < S.size(); ++k) {
      MixedMonomial const& lead = S[k].lead_monomial();
      std::size_t const    dl   = lead.degree();
      if (dl > cfg.cap) {
        out.warnings.push_back("warning: s_" + std::to_string(k)
                               + " exceeds the degree cap "
                               + std::to_string(cfg.cap));
        continue;
      }
      if (has_interior(lead.x)) {
        out.warnings.push_back(detail::truncation_warning(k, lead.x, cfg.cap, sig));
      }
      for (auto const& u : u_set(lead.x, cfg.cap - dl, order.x_order())) {
        out.relations.push_back(delta_tensor(
            mono_mul(MixedMonomial{u, {}}, S[k], MixedMonomial()), lifted));
      }
    }
    return out;
  }

}  // namespace gsb
