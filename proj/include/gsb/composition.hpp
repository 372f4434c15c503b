#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gsb/error.hpp"
#include "gsb/monoid.hpp"
#include "gsb/order.hpp"
#include "gsb/polynomial.hpp"

namespace gsb {

  enum class CompositionKind {
    FreeIntersection,
    FreeInclusion,
    XInclusionOnly,      // 1.1
    YInclusionOnly,      // 1.2
    XYInclusion,         // 1.3
    XYSkewInclusion,     // 1.4
    XIntersectionOnly,   // 2.1
    YIntersectionOnly,   // 2.2
    XYIntersection,      // 2.3
    XYSkewIntersection,  // 2.4
    XInclYInter,         // 3.1
    XInterYIncl,         // 3.2
    CommSPair,
    MZ_C1,
    MZ_C2,
    MZ_C3
  };

  inline char const* kind_name(CompositionKind k) {
    switch (k) {
      case CompositionKind::FreeIntersection: return "Free-Intersection";
      case CompositionKind::FreeInclusion: return "Free-Inclusion";
      case CompositionKind::XInclusionOnly: return "X-Inclusion-Only";
      case CompositionKind::YInclusionOnly: return "Y-Inclusion-Only";
      case CompositionKind::XYInclusion: return "XY-Inclusion";
      case CompositionKind::XYSkewInclusion: return "XY-SkewInclusion";
      case CompositionKind::XIntersectionOnly: return "X-Intersection-Only";
      case CompositionKind::YIntersectionOnly: return "Y-Intersection-Only";
      case CompositionKind::XYIntersection: return "XY-Intersection";
      case CompositionKind::XYSkewIntersection: return "XY-SkewIntersection";
      case CompositionKind::XInclYInter: return "XIncl-YInter";
      case CompositionKind::XInterYIncl: return "XInter-YIncl";
      case CompositionKind::CommSPair: return "Comm-SPair";
      case CompositionKind::MZ_C1: return "MZ-C1";
      case CompositionKind::MZ_C2: return "MZ-C2";
      case CompositionKind::MZ_C3: return "MZ-C3";
    }
    return "";
  }

  // Which free word, if any, a family is parameterized by.
  enum class ParamSlot { None, YWord, XWord };

  // w = lf F rf = lg G rg, where F and G are the two leading monomials in
  // their family roles.
  template <typename M>
  struct Ambiguity {
    M w, lf, rf, lg, rg;

    bool operator==(Ambiguity const&) const = default;
  };

  // One composition case between the role polynomials F and G. When
  // `swapped` is set, F is the second argument of the enumerating call.
  //
  // Witness words, by kind (X words a, b; Y words c, d):
  //   inclusion in X:    F^X = a G^X b        overlap in X:  F^X a = b G^X
  //   inclusion in Y:    F^Y = c G^Y d        overlap in Y:  F^Y c = d G^Y
  //   reverse incl in Y: G^Y = c F^Y d        reverse ovl:   c F^Y = G^Y d
  // MZ-C1: F^Y = c G^Y d.  MZ-C2: F^Y = c c0, G^Y = c0 d.
  template <typename M>
  struct CompositionFamily {
    CompositionKind kind    = CompositionKind::FreeInclusion;
    int             variant = 0;  // 1 or 2 for the two-variant cases
    bool            swapped = false;
    ParamSlot       slot    = ParamSlot::None;
    bool            coprime = false;
    M               lead_f;
    M               lead_g;
    Word            a, b, c, d, c0;

    bool operator==(CompositionFamily const&) const = default;
  };

  namespace detail {
    inline NormalWord nx(Word x) {
      return NormalWord{std::move(x), Word()};
    }
    inline NormalWord ny(Word y) {
      return NormalWord{Word(), std::move(y)};
    }
    inline NormalWord nw(Word x, Word y) {
      return NormalWord{std::move(x), std::move(y)};
    }
    inline MixedMonomial mxy(CommMonomial x, Word y) {
      return MixedMonomial{std::move(x), std::move(y)};
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Instantiation
  ////////////////////////////////////////////////////////////////////////

  inline Ambiguity<Word> instantiate(CompositionFamily<Word> const& fam,
                                     Word const&                    param = {}) {
    if (!param.empty()) {
      throw ParamNotApplicable();
    }
    Word const& F = fam.lead_f;
    if (fam.kind == CompositionKind::FreeIntersection) {
      return {F * fam.a, Word(), fam.a, fam.b, Word()};
    }
    return {F, Word(), Word(), fam.a, fam.b};
  }

  inline Ambiguity<CommMonomial>
  instantiate(CompositionFamily<CommMonomial> const& fam, Word const& param = {}) {
    if (!param.empty()) {
      throw ParamNotApplicable();
    }
    CommMonomial w = comm_lcm_gcd(fam.lead_f, fam.lead_g).first;
    return {w, w / fam.lead_f, CommMonomial(), w / fam.lead_g, CommMonomial()};
  }

  inline Ambiguity<NormalWord>
  instantiate(CompositionFamily<NormalWord> const& fam, Word const& param = {}) {
    using detail::nw;
    using detail::nx;
    using detail::ny;
    if (fam.slot == ParamSlot::None && !param.empty()) {
      throw ParamNotApplicable();
    }
    Word const& FX = fam.lead_f.x;
    Word const& FY = fam.lead_f.y;
    Word const& GX = fam.lead_g.x;
    Word const& GY = fam.lead_g.y;
    Word const& a  = fam.a;
    Word const& b  = fam.b;
    Word const& c  = fam.c;
    Word const& d  = fam.d;
    NormalWord  e;
    switch (fam.kind) {
      case CompositionKind::XInclusionOnly:
      case CompositionKind::XIntersectionOnly: {
        bool const incl = fam.kind == CompositionKind::XInclusionOnly;
        Word const wx   = incl ? FX : FX * a;
        Word const& p   = param;
        if (fam.variant != 2) {
          return {nw(wx, FY * p * GY),
                  e,
                  incl ? ny(p * GY) : nw(a, p * GY),
                  nw(incl ? a : b, FY * p),
                  incl ? nx(b) : e};
        }
        return {nw(wx, GY * p * FY),
                ny(GY * p),
                incl ? e : nx(a),
                nx(incl ? a : b),
                incl ? nw(b, p * FY) : ny(p * FY)};
      }
      case CompositionKind::YInclusionOnly:
      case CompositionKind::YIntersectionOnly: {
        bool const incl = fam.kind == CompositionKind::YInclusionOnly;
        Word const wy   = incl ? FY : FY * c;
        Word const& p   = param;
        if (fam.variant != 2) {
          return {nw(FX * p * GX, wy),
                  e,
                  incl ? nx(p * GX) : nw(p * GX, c),
                  nw(FX * p, incl ? c : d),
                  incl ? ny(d) : e};
        }
        return {nw(GX * p * FX, wy),
                nx(GX * p),
                incl ? e : ny(c),
                ny(incl ? c : d),
                incl ? nw(p * FX, d) : nx(p * FX)};
      }
      case CompositionKind::XYInclusion:
        return {fam.lead_f, e, e, nw(a, c), nw(b, d)};
      case CompositionKind::XYSkewInclusion:
        return {nw(FX, GY), ny(c), ny(d), nx(a), nx(b)};
      case CompositionKind::XYIntersection:
        return {nw(FX * a, FY * c), e, nw(a, c), nw(b, d), e};
      case CompositionKind::XYSkewIntersection:
        return {nw(FX * a, c * FY), ny(c), nx(a), nx(b), ny(d)};
      case CompositionKind::XInclYInter:
        if (fam.variant != 2) {
          return {nw(FX, FY * c), e, ny(c), nw(a, d), nx(b)};
        }
        return {nw(FX, c * FY), ny(c), e, nx(a), nw(b, d)};
      case CompositionKind::XInterYIncl:
        if (fam.variant != 2) {
          return {nw(FX * a, FY), e, nx(a), nw(b, c), ny(d)};
        }
        return {nw(FX * a, GY), ny(c), nw(a, d), nx(b), e};
      case CompositionKind::FreeInclusion:
        return {fam.lead_f, e, e, nx(a), nx(b)};
      case CompositionKind::FreeIntersection:
        return {nx(FX * a), e, nx(a), nx(b), e};
      default:
        throw Error("composition kind does not apply to k<X> (x) k<Y>");
    }
  }

  inline Ambiguity<MixedMonomial>
  instantiate(CompositionFamily<MixedMonomial> const& fam,
              Word const&                             param = {}) {
    using detail::mxy;
    if (fam.slot == ParamSlot::None && !param.empty()) {
      throw ParamNotApplicable();
    }
    CommMonomial const L  = comm_lcm_gcd(fam.lead_f.x, fam.lead_g.x).first;
    CommMonomial const qf = L / fam.lead_f.x;
    CommMonomial const qg = L / fam.lead_g.x;
    Word const&        FY = fam.lead_f.y;
    Word const&        GY = fam.lead_g.y;
    MixedMonomial const e;
    switch (fam.kind) {
      case CompositionKind::MZ_C1:
        return {mxy(L, FY), mxy(qf, {}), e, mxy(qg, fam.c), mxy({}, fam.d)};
      case CompositionKind::MZ_C2:
        return {mxy(L, FY * fam.d), mxy(qf, {}), mxy({}, fam.d), mxy(qg, fam.c), e};
      case CompositionKind::MZ_C3:
        return {mxy(L, FY * param * GY),
                mxy(qf, {}),
                mxy({}, param * GY),
                mxy(qg, FY * param),
                e};
      default:
        throw Error("composition kind does not apply to k[X] (x) k<Y>");
    }
  }

  // lf F rf - lg G rg, for the family's roles of f and g.
  template <typename M>
  Polynomial<M> composition_polynomial(CompositionFamily<M> const& fam,
                                       Polynomial<M> const&        f,
                                       Polynomial<M> const&        g,
                                       Ambiguity<M> const&         amb) {
    Polynomial<M> const& F = fam.swapped ? g : f;
    Polynomial<M> const& G = fam.swapped ? f : g;
    return mono_mul(amb.lf, F, amb.rf) - mono_mul(amb.lg, G, amb.rg);
  }

  template <typename M>
  Polynomial<M> composition_polynomial(CompositionFamily<M> const& fam,
                                       Polynomial<M> const&        f,
                                       Polynomial<M> const&        g,
                                       Word const&                 param = {}) {
    return composition_polynomial(fam, f, g, instantiate(fam, param));
  }

  ////////////////////////////////////////////////////////////////////////
  // Rendering
  ////////////////////////////////////////////////////////////////////////

  template <typename M>
  std::string render(CompositionFamily<M> const& fam, Signature const& sig = {}) {
    std::string out = "kind=";
    out += kind_name(fam.kind);
    if (fam.variant != 0) {
      out += "/w" + std::to_string(fam.variant);
    }
    out += " w=" + to_string(instantiate(fam).w, sig);
    auto xw = [&](Word const& u) { return to_string(u, sig, Side::X); };
    auto yw = [&](Word const& u) { return to_string(u, sig, Side::Y); };
    using K = CompositionKind;
    switch (fam.kind) {
      case K::FreeIntersection:
      case K::FreeInclusion:
      case K::XInclusionOnly:
      case K::XIntersectionOnly:
        out += " a=" + xw(fam.a) + " b=" + xw(fam.b);
        break;
      case K::YInclusionOnly:
      case K::YIntersectionOnly:
      case K::MZ_C1:
        out += " c=" + yw(fam.c) + " d=" + yw(fam.d);
        break;
      case K::MZ_C2:
        out += " c=" + yw(fam.c) + " c0=" + yw(fam.c0) + " d=" + yw(fam.d);
        break;
      case K::CommSPair:
        if (fam.coprime) {
          out += " coprime";
        }
        break;
      case K::MZ_C3:
        break;
      default:
        out += " a=" + xw(fam.a) + " b=" + xw(fam.b) + " c=" + yw(fam.c)
               + " d=" + yw(fam.d);
    }
    if (fam.slot == ParamSlot::YWord) {
      out += " param=Y*";
    } else if (fam.slot == ParamSlot::XWord) {
      out += " param=X*";
    }
    if (fam.swapped) {
      out += " swapped";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    template <typename M>
    void require_monic(Polynomial<M> const& f) {
      if (f.is_zero()) {
        throw ZeroPolynomial();
      }
      if (!f.is_monic()) {
        throw NotMonic();
      }
    }

    inline bool x_central(Polynomial<NormalWord> const& f) {
      for (auto const& t : f.terms()) {
        if (!t.mono.x.empty()) {
          return false;
        }
      }
      return true;
    }

    inline bool y_central(Polynomial<NormalWord> const& f) {
      for (auto const& t : f.terms()) {
        if (!t.mono.y.empty()) {
          return false;
        }
      }
      return true;
    }

    // (a, b) with u = a v b. An empty v counts only at interior positions
    // and only when its polynomial is not central on this side; placements
    // at either end are disjoint placements.
    inline std::vector<std::pair<Word, Word>>
    inclusions(Word const& u, Word const& v, bool v_central) {
      if (!v.empty()) {
        return factorizations(u, v);
      }
      std::vector<std::pair<Word, Word>> out;
      if (!v_central) {
        for (std::size_t p = 1; p < u.size(); ++p) {
          out.emplace_back(u.prefix(p), u.suffix_from(p));
        }
      }
      return out;
    }

    // (c, d) with c u = v d, proper overlap of a prefix of u with a suffix
    // of v.
    inline std::vector<std::pair<Word, Word>> reverse_overlaps(Word const& u,
                                                               Word const& v) {
      std::vector<std::pair<Word, Word>> out;
      for (auto& [bb, aa] : overlaps(v, u)) {
        // v aa = bb u, so bb u = v aa
        out.emplace_back(std::move(bb), std::move(aa));
      }
      return out;
    }

    inline void tensor_oriented(Polynomial<NormalWord> const&           F,
                                Polynomial<NormalWord> const&           G,
                                bool                                    swapped,
                                bool                                    self,
                                std::vector<CompositionFamily<NormalWord>>& out) {
      using K                = CompositionKind;
      NormalWord const& Fl   = F.lead_monomial();
      NormalWord const& Gl   = G.lead_monomial();
      bool const collapse_y  = y_central(F) || y_central(G);
      bool const collapse_x  = x_central(F) || x_central(G);

      auto const xi  = inclusions(Fl.x, Gl.x, x_central(G));
      auto const yi  = inclusions(Fl.y, Gl.y, y_central(G));
      auto const yir = inclusions(Gl.y, Fl.y, y_central(F));
      std::vector<std::pair<Word, Word>> xo;  // (a, b): F^X a = b G^X
      for (auto& [bb, aa] : overlaps(Fl.x, Gl.x)) {
        xo.emplace_back(aa, bb);
      }
      std::vector<std::pair<Word, Word>> yo;  // (c, d): F^Y c = d G^Y
      for (auto& [dd, cc] : overlaps(Fl.y, Gl.y)) {
        yo.emplace_back(cc, dd);
      }
      auto const yor = reverse_overlaps(Fl.y, Gl.y);  // (c, d): c F^Y = G^Y d

      auto base = [&](K kind, int variant) {
        CompositionFamily<NormalWord> fam;
        fam.kind    = kind;
        fam.variant = variant;
        fam.swapped = swapped;
        fam.lead_f  = Fl;
        fam.lead_g  = Gl;
        return fam;
      };
      auto emit_x = [&](K kind, Word const& a, Word const& b) {
        if (self && collapse_y && a.empty() && b.empty()) {
          return;
        }
        for (int v = 1; v <= (collapse_y ? 1 : 2); ++v) {
          auto fam = base(kind, v);
          fam.a    = a;
          fam.b    = b;
          fam.slot = collapse_y ? ParamSlot::None : ParamSlot::YWord;
          out.push_back(std::move(fam));
        }
      };
      auto emit_y = [&](K kind, Word const& c, Word const& d) {
        if (self && collapse_x && c.empty() && d.empty()) {
          return;
        }
        for (int v = 1; v <= (collapse_x ? 1 : 2); ++v) {
          auto fam = base(kind, v);
          fam.c    = c;
          fam.d    = d;
          fam.slot = collapse_x ? ParamSlot::None : ParamSlot::XWord;
          out.push_back(std::move(fam));
        }
      };
      auto emit_xy = [&](K kind, int variant, auto const& xp, auto const& yp) {
        auto fam = base(kind, variant);
        fam.a    = xp.first;
        fam.b    = xp.second;
        fam.c    = yp.first;
        fam.d    = yp.second;
        out.push_back(std::move(fam));
      };
      auto identity = [&](auto const& xp, auto const& yp) {
        return self && xp.first.empty() && xp.second.empty()
               && yp.first.empty() && yp.second.empty();
      };

      for (auto const& [a, b] : xi) {
        emit_x(K::XInclusionOnly, a, b);
      }
      for (auto const& [c, d] : yi) {
        emit_y(K::YInclusionOnly, c, d);
      }
      for (auto const& xp : xi) {
        for (auto const& yp : yi) {
          if (!identity(xp, yp)) {
            emit_xy(K::XYInclusion, 0, xp, yp);
          }
        }
        for (auto const& yp : yir) {
          if (!identity(xp, yp)) {
            emit_xy(K::XYSkewInclusion, 0, xp, yp);
          }
        }
      }
      for (auto const& [a, b] : xo) {
        emit_x(K::XIntersectionOnly, a, b);
      }
      for (auto const& [c, d] : yo) {
        emit_y(K::YIntersectionOnly, c, d);
      }
      for (auto const& xp : xo) {
        for (auto const& yp : yo) {
          emit_xy(K::XYIntersection, 0, xp, yp);
        }
        for (auto const& yp : yor) {
          emit_xy(K::XYSkewIntersection, 0, xp, yp);
        }
      }
      for (auto const& xp : xi) {
        for (auto const& yp : yo) {
          emit_xy(K::XInclYInter, 1, xp, yp);
        }
        for (auto const& yp : yor) {
          emit_xy(K::XInclYInter, 2, xp, yp);
        }
      }
      for (auto const& xp : xo) {
        for (auto const& yp : yi) {
          emit_xy(K::XInterYIncl, 1, xp, yp);
        }
        for (auto const& yp : yir) {
          emit_xy(K::XInterYIncl, 2, xp, yp);
        }
      }
    }

    inline void free_oriented(Polynomial<Word> const&               F,
                              Polynomial<Word> const&               G,
                              bool                                  swapped,
                              bool                                  self,
                              std::vector<CompositionFamily<Word>>& out) {
      Word const& Fl = F.lead_monomial();
      Word const& Gl = G.lead_monomial();
      auto base      = [&](CompositionKind kind, Word a, Word b) {
        CompositionFamily<Word> fam;
        fam.kind    = kind;
        fam.swapped = swapped;
        fam.lead_f  = Fl;
        fam.lead_g  = Gl;
        fam.a       = std::move(a);
        fam.b       = std::move(b);
        return fam;
      };
      // Leading word 1 means G is a nonzero constant, which is central.
      if (!Gl.empty()) {
        for (auto& [a, b] : factorizations(Fl, Gl)) {
          if (!(self && a.empty() && b.empty())) {
            out.push_back(base(CompositionKind::FreeInclusion, a, b));
          }
        }
      }
      for (auto& [bb, aa] : overlaps(Fl, Gl)) {
        out.push_back(base(CompositionKind::FreeIntersection, aa, bb));
      }
    }

    inline void mz_oriented(Polynomial<MixedMonomial> const&               F,
                            Polynomial<MixedMonomial> const&               G,
                            bool                                           swapped,
                            bool                                           self,
                            std::vector<CompositionFamily<MixedMonomial>>& out) {
      MixedMonomial const& Fl = F.lead_monomial();
      MixedMonomial const& Gl = G.lead_monomial();
      auto base               = [&](CompositionKind kind) {
        CompositionFamily<MixedMonomial> fam;
        fam.kind    = kind;
        fam.swapped = swapped;
        fam.lead_f  = Fl;
        fam.lead_g  = Gl;
        return fam;
      };
      // C1: G^Y is a subword of F^Y. Equal Y leads need F^X >= G^X, and an
      // empty G^Y is only placed at the front.
      if (!(Fl.y == Gl.y && F.order().x_order().compare(Fl.x, Gl.x) < 0)) {
        std::vector<std::pair<Word, Word>> cds;
        if (Gl.y.empty()) {
          cds.emplace_back(Word(), Fl.y);
        } else {
          cds = factorizations(Fl.y, Gl.y);
        }
        for (auto& [c, d] : cds) {
          if (self && c.empty() && d.empty()) {
            continue;
          }
          auto fam = base(CompositionKind::MZ_C1);
          fam.c    = c;
          fam.d    = d;
          out.push_back(std::move(fam));
        }
      }
      // C2: a proper nonempty end of F^Y is a beginning of G^Y.
      for (auto& [c, d] : overlaps(Fl.y, Gl.y)) {
        auto fam = base(CompositionKind::MZ_C2);
        fam.c    = c;
        fam.d    = d;
        fam.c0   = Fl.y.suffix_from(c.size());
        out.push_back(std::move(fam));
      }
      // C3: shared X variables, both Y leads nonempty.
      if (!Fl.y.empty() && !Gl.y.empty()
          && !comm_lcm_gcd(Fl.x, Gl.x).second.is_one()) {
        auto fam = base(CompositionKind::MZ_C3);
        fam.slot = ParamSlot::YWord;
        out.push_back(std::move(fam));
      }
    }
  }  // namespace detail

  // All families of the pair (f, g) in k<X> (x) k<Y>, both orientations
  // unless f and g are the same element.
  inline std::vector<CompositionFamily<NormalWord>>
  tensor_compositions(Polynomial<NormalWord> const& f,
                      Polynomial<NormalWord> const& g,
                      bool                          self) {
    detail::require_monic(f);
    detail::require_monic(g);
    std::vector<CompositionFamily<NormalWord>> out;
    detail::tensor_oriented(f, g, false, self, out);
    if (!self) {
      detail::tensor_oriented(g, f, true, self, out);
    }
    return out;
  }

  inline std::vector<CompositionFamily<NormalWord>>
  tensor_compositions(Polynomial<NormalWord> const& f,
                      Polynomial<NormalWord> const& g) {
    return tensor_compositions(f, g, &f == &g);
  }

  inline std::vector<CompositionFamily<Word>>
  free_compositions(Polynomial<Word> const& f,
                    Polynomial<Word> const& g,
                    bool                    self) {
    detail::require_monic(f);
    detail::require_monic(g);
    std::vector<CompositionFamily<Word>> out;
    detail::free_oriented(f, g, false, self, out);
    if (!self) {
      detail::free_oriented(g, f, true, self, out);
    }
    return out;
  }

  inline std::vector<CompositionFamily<Word>>
  free_compositions(Polynomial<Word> const& f, Polynomial<Word> const& g) {
    return free_compositions(f, g, &f == &g);
  }

  // The Buchberger S-pair; the family is flagged when the leading monomials
  // are coprime.
  inline CompositionFamily<CommMonomial>
  comm_spair(Polynomial<CommMonomial> const& f,
             Polynomial<CommMonomial> const& g) {
    detail::require_monic(f);
    detail::require_monic(g);
    CompositionFamily<CommMonomial> fam;
    fam.kind    = CompositionKind::CommSPair;
    fam.lead_f  = f.lead_monomial();
    fam.lead_g  = g.lead_monomial();
    fam.coprime = comm_lcm_gcd(fam.lead_f, fam.lead_g).second.is_one();
    return fam;
  }

  inline std::vector<CompositionFamily<MixedMonomial>>
  mz_compositions(Polynomial<MixedMonomial> const& f,
                  Polynomial<MixedMonomial> const& g,
                  bool                             self) {
    detail::require_monic(f);
    detail::require_monic(g);
    std::vector<CompositionFamily<MixedMonomial>> out;
    detail::mz_oriented(f, g, false, self, out);
    if (!self) {
      detail::mz_oriented(g, f, true, self, out);
    }
    return out;
  }

  inline std::vector<CompositionFamily<MixedMonomial>>
  mz_compositions(Polynomial<MixedMonomial> const& f,
                  Polynomial<MixedMonomial> const& g) {
    return mz_compositions(f, g, &f == &g);
  }

  // Uniform entry point used by completion.
  inline std::vector<CompositionFamily<Word>>
  compositions(Polynomial<Word> const& f, Polynomial<Word> const& g, bool self) {
    return free_compositions(f, g, self);
  }
  inline std::vector<CompositionFamily<NormalWord>>
  compositions(Polynomial<NormalWord> const& f,
               Polynomial<NormalWord> const& g,
               bool                          self) {
    return tensor_compositions(f, g, self);
  }
  inline std::vector<CompositionFamily<MixedMonomial>>
  compositions(Polynomial<MixedMonomial> const& f,
               Polynomial<MixedMonomial> const& g,
               bool                             self) {
    return mz_compositions(f, g, self);
  }
  inline std::vector<CompositionFamily<CommMonomial>>
  compositions(Polynomial<CommMonomial> const& f,
               Polynomial<CommMonomial> const& g,
               bool                            self) {
    if (self) {
      return {};
    }
    return {comm_spair(f, g)};
  }

}  // namespace gsb
