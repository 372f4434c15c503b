#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gsb/composition.hpp"
#include "gsb/error.hpp"
#include "gsb/monoid.hpp"
#include "gsb/order.hpp"
#include "gsb/polynomial.hpp"

namespace gsb {

  ////////////////////////////////////////////////////////////////////////
  // Division
  ////////////////////////////////////////////////////////////////////////

  template <typename M>
  struct ReductionStep {
    Scalar      coeff;
    M           left;
    std::size_t index;
    M           right;
  };

  template <typename M>
  struct ReductionTrace {
    std::vector<ReductionStep<M>> steps;
    Polynomial<M>                 remainder;

    // sum of coeff * left * S[index] * right, plus the remainder
    Polynomial<M> replay(std::vector<Polynomial<M>> const& S) const {
      Polynomial<M> out = remainder;
      for (auto const& st : steps) {
        out += st.coeff * mono_mul(st.left, S.at(st.index), st.right);
      }
      return out;
    }
  };

  namespace detail {
    template <typename M>
    using TermMap = std::map<M, Scalar, OrderGreater<M>>;

    template <typename M>
    void subtract_into(TermMap<M>&          acc,
                       Scalar const&        alpha,
                       M const&             a,
                       Polynomial<M> const& s,
                       M const&             b) {
      for (auto const& t : s.terms()) {
        M    m          = mul(a, t.mono, b);
        auto [it, ok]   = acc.try_emplace(std::move(m), -(alpha * t.coeff));
        if (!ok) {
          it->second -= alpha * t.coeff;
          if (it->second.is_zero()) {
            acc.erase(it);
          }
        }
      }
    }

    template <typename M>
    TermMap<M> to_map(Polynomial<M> const& f) {
      TermMap<M> acc(OrderGreater<M>{f.order()});
      for (auto const& t : f.terms()) {
        acc.emplace_hint(acc.end(), t.mono, t.coeff);
      }
      return acc;
    }
  }  // namespace detail

  // Full reduction of f by the monic polynomials S. The largest reducible
  // monomial is rewritten first, using the earliest element of S and its
  // leftmost occurrence.
  template <typename M>
  ReductionTrace<M> reduce(Polynomial<M> const&              f,
                           std::vector<Polynomial<M>> const& S) {
    ReductionTrace<M> trace;
    std::vector<Term<M>> rem;
    auto acc = detail::to_map(f);
    while (!acc.empty()) {
      auto it = acc.begin();
      bool done = false;
      for (std::size_t i = 0; i < S.size() && !done; ++i) {
        if (S[i].is_zero()) {
          continue;
        }
        auto e = first_embedding(it->first, S[i].lead_monomial());
        if (e) {
          Scalar alpha = it->second / S[i].lead_coeff();
          trace.steps.push_back({alpha, e->first, i, e->second});
          detail::subtract_into(acc, alpha, e->first, S[i], e->second);
          done = true;
        }
      }
      if (!done) {
        rem.push_back({it->second, it->first});
        acc.erase(it);
      }
    }
    trace.remainder = Polynomial<M>::normalize(f.field(), f.order(), std::move(rem));
    return trace;
  }

  // Reduction with randomly chosen steps: any reducible monomial, any
  // element of S, any occurrence.
  template <typename M, typename Rng>
  ReductionTrace<M> reduce_random(Polynomial<M> const&              f,
                                  std::vector<Polynomial<M>> const& S,
                                  Rng&                              rng) {
    ReductionTrace<M> trace;
    auto acc = detail::to_map(f);
    struct Option {
      M           mono;
      std::size_t index;
      M           a, b;
    };
    while (true) {
      std::vector<Option> options;
      for (auto const& [m, c] : acc) {
        for (std::size_t i = 0; i < S.size(); ++i) {
          for (auto& [a, b] : embeddings(m, S[i].lead_monomial())) {
            options.push_back({m, i, a, b});
          }
        }
      }
      if (options.empty()) {
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      Option const& o     = options[pick(rng)];
      Scalar        alpha = acc.at(o.mono) / S[o.index].lead_coeff();
      trace.steps.push_back({alpha, o.a, o.index, o.b});
      detail::subtract_into(acc, alpha, o.a, S[o.index], o.b);
    }
    std::vector<Term<M>> rem;
    for (auto& [m, c] : acc) {
      rem.push_back({c, m});
    }
    trace.remainder = Polynomial<M>::normalize(f.field(), f.order(), std::move(rem));
    return trace;
  }

  ////////////////////////////////////////////////////////////////////////
  // Completion state
  ////////////////////////////////////////////////////////////////////////

  enum class Status { CompleteUpTo, Saturated, Exhausted };

  struct CompletionConfig {
    std::size_t max_degree      = 8;
    std::size_t param_bound     = 2;
    std::size_t max_pairs       = 2'000'000;
    bool        coprime_criterion = true;
    // false: verify only, record non-trivial compositions as failures
    bool        allow_additions = true;
    std::function<void(std::string const&)> log;
  };

  template <typename M>
  struct PendingInstance {
    std::size_t          deg;
    std::size_t          seq;
    std::size_t          i, j;
    CompositionFamily<M> fam;
    Word                 param;
    Ambiguity<M>         amb;
  };

  template <typename M>
  struct BasisState {
    Field                      field;
    order_t<M>                 order;
    Signature                  sig;
    CompletionConfig           cfg;
    std::vector<Polynomial<M>> basis;
    std::size_t                inputs = 0;

    Status      status          = Status::CompleteUpTo;
    std::size_t added           = 0;
    std::size_t pairs_processed = 0;
    std::size_t pairs_trivial   = 0;
    std::size_t pairs_skipped_degree  = 0;
    std::size_t pairs_skipped_coprime = 0;
    std::size_t pairs_duplicate = 0;
    // Some parametric family had instances beyond the parameter bound.
    bool param_truncated = false;

    // Non-trivial compositions found in verify-only mode.
    std::vector<std::string> failures;

    struct Later {
      bool operator()(PendingInstance<M> const& x,
                      PendingInstance<M> const& y) const {
        return std::tie(x.deg, x.seq) > std::tie(y.deg, y.seq);
      }
    };
    std::priority_queue<PendingInstance<M>, std::vector<PendingInstance<M>>, Later>
                                              queue;
    std::set<std::vector<std::uint32_t>>      seen;
    std::size_t                               next_seq = 0;

    bool is_gsb() const {
      return failures.empty() && status != Status::Exhausted;
    }

    // The degree up to which word problems are decided.
    std::size_t verified_degree() const {
      return cfg.max_degree;
    }

    std::string status_string() const {
      switch (status) {
        case Status::Saturated: return "Saturated";
        case Status::Exhausted: return "Exhausted";
        case Status::CompleteUpTo:
          return "CompleteUpTo(" + std::to_string(cfg.max_degree) + ")";
      }
      return "";
    }

    std::string summary() const {
      std::ostringstream os;
      os << "status=" << status_string() << "\n"
         << "max_degree=" << cfg.max_degree << "\n"
         << "param_bound=" << cfg.param_bound << "\n"
         << "basis_size=" << basis.size() << "\n"
         << "inputs=" << inputs << "\n"
         << "added=" << added << "\n"
         << "pairs_processed=" << pairs_processed << "\n"
         << "pairs_trivial=" << pairs_trivial << "\n"
         << "pairs_skipped_degree=" << pairs_skipped_degree << "\n"
         << "pairs_skipped_coprime=" << pairs_skipped_coprime << "\n"
         << "pairs_duplicate=" << pairs_duplicate << "\n"
         << "failures=" << failures.size() << "\n";
      return os.str();
    }
  };

  template <typename M>
  class BudgetExceeded : public Error {
   public:
    explicit BudgetExceeded(BasisState<M> s)
        : Error("pair budget exceeded with "
                + std::to_string(s.queue.size()) + " compositions pending"),
          state(std::move(s)) {}

    BasisState<M> state;
  };

  namespace detail {
    inline void encode(Word const& w, std::vector<std::uint32_t>& out) {
      out.push_back(static_cast<std::uint32_t>(w.size()));
      out.insert(out.end(), w.begin(), w.end());
    }
    inline void encode(CommMonomial const& m, std::vector<std::uint32_t>& out) {
      out.push_back(static_cast<std::uint32_t>(m.support_end()));
      out.insert(out.end(), m.exponents().begin(), m.exponents().end());
    }
    inline void encode(NormalWord const& u, std::vector<std::uint32_t>& out) {
      encode(u.x, out);
      encode(u.y, out);
    }
    inline void encode(MixedMonomial const& u, std::vector<std::uint32_t>& out) {
      encode(u.x, out);
      encode(u.y, out);
    }

    // The same ambiguity may arise from several families; key it by w and
    // the unordered pair of placements.
    template <typename M>
    std::vector<std::uint32_t> instance_key(std::size_t         fi,
                                            std::size_t         gi,
                                            Ambiguity<M> const& amb) {
      std::vector<std::uint32_t> p, q, out;
      p.push_back(static_cast<std::uint32_t>(fi));
      encode(amb.lf, p);
      encode(amb.rf, p);
      q.push_back(static_cast<std::uint32_t>(gi));
      encode(amb.lg, q);
      encode(amb.rg, q);
      if (q < p) {
        std::swap(p, q);
      }
      encode(amb.w, out);
      out.insert(out.end(), p.begin(), p.end());
      out.insert(out.end(), q.begin(), q.end());
      return out;
    }

    // All words of length <= max_len over n letters, by length then lex.
    inline std::vector<Word> words_up_to(std::size_t n, std::size_t max_len) {
      std::vector<Word> out{Word()};
      std::size_t       start = 0;
      for (std::size_t len = 1; len <= max_len && n > 0; ++len) {
        std::size_t const end = out.size();
        for (std::size_t k = start; k < end; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            out.push_back(out[k] * Word{static_cast<Letter>(l)});
          }
        }
        start = end;
      }
      return out;
    }

    template <typename M>
    void enqueue_pair(BasisState<M>& st, std::size_t i, std::size_t j) {
      auto const& cfg  = st.cfg;
      auto const  fams = compositions(st.basis[i], st.basis[j], i == j);
      for (auto const& fam : fams) {
        if (fam.kind == CompositionKind::CommSPair && fam.coprime
            && cfg.coprime_criterion) {
          ++st.pairs_skipped_coprime;
          continue;
        }
        std::vector<Word> params{Word()};
        if (fam.slot != ParamSlot::None) {
          std::size_t const n
              = fam.slot == ParamSlot::YWord ? st.sig.y.size() : st.sig.x.size();
          params = words_up_to(n, cfg.param_bound);
          if (n > 0) {
            st.param_truncated = true;
          }
        }
        for (auto& param : params) {
          Ambiguity<M> amb = instantiate(fam, param);
          std::size_t  deg = degree(amb.w);
          if (deg > cfg.max_degree) {
            ++st.pairs_skipped_degree;
            continue;
          }
          st.queue.push(PendingInstance<M>{
              deg, st.next_seq++, i, j, fam, std::move(param), std::move(amb)});
        }
      }
    }

    template <typename M>
    void add_element(BasisState<M>& st, Polynomial<M> s) {
      st.basis.push_back(std::move(s));
      std::size_t const k = st.basis.size() - 1;
      for (std::size_t j = 0; j <= k; ++j) {
        enqueue_pair(st, j, k);
      }
    }
  }  // namespace detail

  template <typename M>
  std::string describe(PendingInstance<M> const& inst, Signature const& sig) {
    std::string out = "pair#(" + std::to_string(inst.i) + ","
                      + std::to_string(inst.j) + ") kind="
                      + kind_name(inst.fam.kind);
    if (inst.fam.variant != 0) {
      out += "/w" + std::to_string(inst.fam.variant);
    }
    out += " w=" + to_string(inst.amb.w, sig);
    if (inst.fam.slot != ParamSlot::None) {
      out += " param="
             + to_string(inst.param,
                         sig,
                         inst.fam.slot == ParamSlot::YWord ? Side::Y : Side::X);
    }
    return out;
  }

  // Process queued compositions until the queue is empty or the budget is
  // spent.
  template <typename M>
  void run_completion(BasisState<M>& st) {
    auto const& cfg = st.cfg;
    std::size_t budget = cfg.max_pairs;
    while (!st.queue.empty()) {
      if (budget == 0) {
        st.status = Status::Exhausted;
        throw BudgetExceeded<M>(st);
      }
      --budget;
      PendingInstance<M> inst = st.queue.top();
      st.queue.pop();
      std::size_t const fi = inst.fam.swapped ? inst.j : inst.i;
      std::size_t const gi = inst.fam.swapped ? inst.i : inst.j;
      if (!st.seen.insert(detail::instance_key(fi, gi, inst.amb)).second) {
        ++st.pairs_duplicate;
        continue;
      }
      ++st.pairs_processed;
      Polynomial<M> p = composition_polynomial(
          inst.fam, st.basis[inst.i], st.basis[inst.j], inst.amb);
      Polynomial<M> r = reduce(p, st.basis).remainder;
      if (r.is_zero()) {
        ++st.pairs_trivial;
        if (cfg.log) {
          cfg.log(describe(inst, st.sig) + " → trivial");
        }
        continue;
      }
      if (!cfg.allow_additions) {
        std::string line = describe(inst, st.sig)
                           + " → non-trivial: " + r.to_string(st.sig);
        st.failures.push_back(line);
        if (cfg.log) {
          cfg.log(line);
        }
        continue;
      }
      detail::add_element(st, r.monic());
      ++st.added;
      if (cfg.log) {
        cfg.log(describe(inst, st.sig) + " → added s_"
                + std::to_string(st.basis.size() - 1));
      }
    }
    st.status = (st.pairs_skipped_degree == 0 && !st.param_truncated)
                    ? Status::Saturated
                    : Status::CompleteUpTo;
  }

  template <typename M>
  BasisState<M> make_state(std::vector<Polynomial<M>> const& S0,
                           Field                             field,
                           order_t<M> const&                 order,
                           Signature const&                  sig,
                           CompletionConfig                  cfg) {
    BasisState<M> st;
    st.field = field;
    st.order = order;
    st.sig   = sig;
    st.cfg   = std::move(cfg);
    for (auto const& f : S0) {
      if (f.is_zero()) {
        throw ZeroInput();
      }
      if (f.field() != field) {
        throw FieldMismatch();
      }
      if (!(f.order() == order)) {
        throw OrderMismatch();
      }
      detail::add_element(st, f.monic());
    }
    st.inputs = S0.size();
    return st;
  }

  // Shirshov completion of S0 up to the configured degree and parameter
  // bounds. Throws BudgetExceeded with the partial state when the pair
  // budget runs out.
  template <typename M>
  BasisState<M> complete(std::vector<Polynomial<M>> const& S0,
                         Field                             field,
                         order_t<M> const&                 order,
                         Signature const&                  sig,
                         CompletionConfig                  cfg = {}) {
    BasisState<M> st = make_state(S0, field, order, sig, std::move(cfg));
    run_completion(st);
    return st;
  }

  template <typename M>
  BasisState<M> complete(std::vector<Polynomial<M>> const& S0,
                         Signature const&                  sig,
                         CompletionConfig                  cfg = {}) {
    if (S0.empty()) {
      throw Error("complete: field and order are needed for an empty input");
    }
    return complete(S0, S0.front().field(), S0.front().order(), sig, std::move(cfg));
  }

  // Verify that S is closed under compositions within the bounds, adding
  // nothing.
  template <typename M>
  BasisState<M> check(std::vector<Polynomial<M>> const& S,
                      Field                             field,
                      order_t<M> const&                 order,
                      Signature const&                  sig,
                      CompletionConfig                  cfg = {}) {
    cfg.allow_additions = false;
    return complete(S, field, order, sig, std::move(cfg));
  }

  // Continue an interrupted completion with a fresh budget.
  template <typename M>
  BasisState<M> resume(BasisState<M> st, std::size_t max_pairs) {
    st.cfg.max_pairs = max_pairs;
    st.status        = Status::CompleteUpTo;
    run_completion(st);
    return st;
  }

  template <typename M>
  std::pair<bool, ReductionTrace<M>> is_trivial(CompositionFamily<M> const& fam,
                                                Polynomial<M> const&        f,
                                                Polynomial<M> const&        g,
                                                std::vector<Polynomial<M>> const& S,
                                                Word const& param = {}) {
    auto trace = reduce(composition_polynomial(fam, f, g, param), S);
    bool zero  = trace.remainder.is_zero();
    return {zero, std::move(trace)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Minimal bases
  ////////////////////////////////////////////////////////////////////////

  // Removes elements whose leading monomial is divisible by another's (the
  // earlier one wins on equal leads), then tail-reduces every element
  // against the rest.
  template <typename M>
  std::vector<Polynomial<M>> minimalize(std::vector<Polynomial<M>> S) {
    for (auto& s : S) {
      if (s.is_zero()) {
        throw ZeroInput();
      }
      s = s.monic();
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < S.size() && !changed; ++i) {
        for (std::size_t j = 0; j < S.size(); ++j) {
          if (j == i) {
            continue;
          }
          M const& li = S[i].lead_monomial();
          M const& lj = S[j].lead_monomial();
          if (!divides(lj, li) || (li == lj && j > i)) {
            continue;
          }
          std::vector<Polynomial<M>> rest;
          for (std::size_t k = 0; k < S.size(); ++k) {
            if (k != i) {
              rest.push_back(S[k]);
            }
          }
          auto r = reduce(S[i], rest).remainder;
          if (r.is_zero()) {
            S.erase(S.begin() + i);
          } else {
            S[i] = r.monic();
          }
          changed = true;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < S.size(); ++i) {
      std::vector<Polynomial<M>> rest;
      for (std::size_t k = 0; k < S.size(); ++k) {
        if (k != i) {
          rest.push_back(S[k]);
        }
      }
      S[i] = reduce(S[i], rest).remainder.monic();
    }
    return S;
  }

  template <typename M>
  BasisState<M> minimalize(BasisState<M> st) {
    st.basis = minimalize(std::move(st.basis));
    return st;
  }

  // A pair (i, j) with lead(S[j]) dividing lead(S[i]), if any.
  template <typename M>
  std::optional<std::pair<std::size_t, std::size_t>>
  non_minimal_pair(std::vector<Polynomial<M>> const& S) {
    for (std::size_t i = 0; i < S.size(); ++i) {
      for (std::size_t j = 0; j < S.size(); ++j) {
        if (i != j && divides(S[j].lead_monomial(), S[i].lead_monomial())) {
          return std::pair{i, j};
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Irr(S)
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline bool has_suffix_in(Word const& w, std::vector<Word const*> const& leads) {
      for (auto const* l : leads) {
        if (w.ends_with(*l)) {
          return true;
        }
      }
      return false;
    }

    // Words of length len over n letters with no factor in `leads`.
    inline void avoiding_words(std::size_t                     n,
                               std::size_t                     len,
                               std::vector<Word const*> const& leads,
                               Word&                           cur,
                               std::vector<Word>&              out) {
      if (has_suffix_in(cur, leads)) {
        return;
      }
      if (cur.size() == len) {
        out.push_back(cur);
        return;
      }
      for (std::size_t l = 0; l < n; ++l) {
        cur.push_back(static_cast<Letter>(l));
        avoiding_words(n, len, leads, cur, out);
        cur.pop_back();
      }
    }

    inline std::vector<Word> avoiding_words(std::size_t                     n,
                                            std::size_t                     len,
                                            std::vector<Word const*> const& leads) {
      std::vector<Word> out;
      Word              cur;
      for (auto const* l : leads) {
        if (l->empty()) {
          return out;
        }
      }
      avoiding_words(n, len, leads, cur, out);
      return out;
    }

    inline void comm_monomials_rec(std::size_t                 n,
                               std::size_t                 deg,
                               std::size_t                 var,
                               std::vector<std::uint32_t>& exps,
                               std::vector<CommMonomial>&  out) {
      if (var + 1 == n) {
        exps[var] = static_cast<std::uint32_t>(deg);
        out.emplace_back(exps);
        exps[var] = 0;
        return;
      }
      for (std::size_t e = 0; e <= deg; ++e) {
        exps[var] = static_cast<std::uint32_t>(e);
        comm_monomials_rec(n, deg - e, var + 1, exps, out);
      }
      exps[var] = 0;
    }
  }  // namespace detail

  // All commutative monomials of degree deg in n variables.
  inline std::vector<CommMonomial> comm_monomials(std::size_t n, std::size_t deg) {
    std::vector<CommMonomial> out;
    if (n == 0) {
      if (deg == 0) {
        out.emplace_back();
      }
      return out;
    }
    std::vector<std::uint32_t> exps(n, 0);
    detail::comm_monomials_rec(n, deg, 0, exps, out);
    return out;
  }

  inline std::vector<Word> all_words(std::size_t n, std::size_t len) {
    return detail::avoiding_words(n, len, {});
  }

  namespace detail {
    inline std::vector<Word> irr_monomials(std::vector<Word> const& leads,
                                           Signature const&         sig,
                                           std::size_t              d) {
      std::vector<Word const*> ptrs;
      for (auto const& l : leads) {
        ptrs.push_back(&l);
      }
      return avoiding_words(sig.x.size(), d, ptrs);
    }

    inline std::vector<CommMonomial>
    irr_monomials(std::vector<CommMonomial> const& leads,
                  Signature const&                 sig,
                  std::size_t                      d) {
      std::vector<CommMonomial> out;
      for (auto& m : comm_monomials(sig.x.size(), d)) {
        bool ok = true;
        for (auto const& l : leads) {
          if (l.divides(m)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          out.push_back(std::move(m));
        }
      }
      return out;
    }

    inline std::vector<NormalWord> irr_monomials(std::vector<NormalWord> const& leads,
                                                 Signature const&               sig,
                                                 std::size_t                    d) {
      std::vector<NormalWord> out;
      for (std::size_t i = 0; i <= d; ++i) {
        for (auto& ux : all_words(sig.x.size(), i)) {
          std::vector<Word const*> active;
          for (auto const& l : leads) {
            if (is_subword(l.x, ux)) {
              active.push_back(&l.y);
            }
          }
          for (auto& uy : avoiding_words(sig.y.size(), d - i, active)) {
            out.push_back(NormalWord{ux, std::move(uy)});
          }
        }
      }
      return out;
    }

    inline std::vector<MixedMonomial>
    irr_monomials(std::vector<MixedMonomial> const& leads,
                  Signature const&                  sig,
                  std::size_t                       d) {
      std::vector<MixedMonomial> out;
      for (std::size_t i = 0; i <= d; ++i) {
        for (auto& ux : comm_monomials(sig.x.size(), i)) {
          std::vector<Word const*> active;
          for (auto const& l : leads) {
            if (l.x.divides(ux)) {
              active.push_back(&l.y);
            }
          }
          for (auto& uy : avoiding_words(sig.y.size(), d - i, active)) {
            out.push_back(MixedMonomial{ux, std::move(uy)});
          }
        }
      }
      return out;
    }
  }  // namespace detail

  // Monomials of total degree d with no factor a lead(s) b, descending.
  template <typename M>
  std::vector<M> irr(std::vector<Polynomial<M>> const& S,
                     Signature const&                  sig,
                     order_t<M> const&                 order,
                     std::size_t                       d) {
    std::vector<M> leads;
    for (auto const& s : S) {
      leads.push_back(s.lead_monomial());
    }
    auto out = detail::irr_monomials(leads, sig, d);
    std::sort(out.begin(), out.end(), OrderGreater<M>{order});
    return out;
  }

  template <typename M>
  std::vector<M> irr(BasisState<M> const& st, std::size_t d) {
    return irr(st.basis, st.sig, st.order, d);
  }

  ////////////////////////////////////////////////////////////////////////
  // Word problem
  ////////////////////////////////////////////////////////////////////////

  template <typename M>
  bool word_problem(Polynomial<M> const& f, BasisState<M> const& st) {
    if (f.is_zero()) {
      return true;
    }
    std::size_t d = 0;
    for (auto const& t : f.terms()) {
      d = std::max(d, degree(t.mono));
    }
    if (st.status != Status::Saturated && d > st.verified_degree()) {
      throw DegreeOutOfBound(d, st.verified_degree());
    }
    return reduce(f, st.basis).remainder.is_zero();
  }

}  // namespace gsb
