#pragma once

#include <algorithm>
#include <compare>
#include <string>

#include "gsb/error.hpp"
#include "gsb/monoid.hpp"

namespace gsb {

  // Letters are ordered by index everywhere: x1 < x2 < ...

  // Length first, then left-to-right lexicographic.
  inline std::strong_ordering compare_deglex(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() <=> v.size();
    }
    return u <=> v;
  }

  // Plain left-to-right lexicographic (a proper prefix is smaller).
  inline std::strong_ordering compare_lex(Word const& u, Word const& v) {
    return u <=> v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Orders on [X]
  ////////////////////////////////////////////////////////////////////////

  class CommOrder {
   public:
    enum class Kind { DegLex, Lex, DegRevLex };

    constexpr CommOrder() = default;
    constexpr explicit CommOrder(Kind k) : kind_(k) {}

    static constexpr CommOrder deglex() {
      return CommOrder(Kind::DegLex);
    }
    static constexpr CommOrder lex() {
      return CommOrder(Kind::Lex);
    }
    static constexpr CommOrder degrevlex() {
      return CommOrder(Kind::DegRevLex);
    }

    constexpr Kind kind() const noexcept {
      return kind_;
    }

    bool is_graded() const noexcept {
      return kind_ != Kind::Lex;
    }

    // Lex: the exponent of the largest variable where the two differ
    // decides. RevLex: at the smallest differing variable the smaller
    // exponent wins.
    std::strong_ordering compare(CommMonomial const& m,
                                 CommMonomial const& n) const {
      if (kind_ != Kind::Lex) {
        auto dm = m.degree(), dn = n.degree();
        if (dm != dn) {
          return dm <=> dn;
        }
      }
      std::size_t const len = std::max(m.support_end(), n.support_end());
      if (kind_ == Kind::DegRevLex) {
        for (std::size_t i = 0; i < len; ++i) {
          if (m.exponent(i) != n.exponent(i)) {
            return n.exponent(i) <=> m.exponent(i);
          }
        }
        return std::strong_ordering::equal;
      }
      for (std::size_t i = len; i-- > 0;) {
        if (m.exponent(i) != n.exponent(i)) {
          return m.exponent(i) <=> n.exponent(i);
        }
      }
      return std::strong_ordering::equal;
    }

    std::string name() const {
      switch (kind_) {
        case Kind::DegLex: return "deglex";
        case Kind::Lex: return "lex";
        case Kind::DegRevLex: return "degrevlex";
      }
      return "";
    }

    constexpr bool operator==(CommOrder const&) const = default;

   private:
    Kind kind_ = Kind::DegLex;
  };

  ////////////////////////////////////////////////////////////////////////
  // Orders on a free monoid
  ////////////////////////////////////////////////////////////////////////

  class FreeOrder {
   public:
    enum class Kind { DegLex, Eps };

    constexpr FreeOrder() = default;

    static constexpr FreeOrder deglex() {
      return FreeOrder();
    }

    // u > v iff gamma(u) > gamma(v), or they agree and u >lex v.
    static constexpr FreeOrder eps(CommOrder comm = CommOrder::deglex()) {
      FreeOrder o;
      o.kind_ = Kind::Eps;
      o.comm_ = comm;
      return o;
    }

    constexpr Kind kind() const noexcept {
      return kind_;
    }

    constexpr CommOrder comm() const noexcept {
      return comm_;
    }

    bool is_graded() const noexcept {
      return kind_ == Kind::DegLex || comm_.is_graded();
    }

    std::strong_ordering compare(Word const& u, Word const& v) const {
      if (kind_ == Kind::DegLex) {
        return compare_deglex(u, v);
      }
      auto c = comm_.compare(gamma(u), gamma(v));
      if (c != 0) {
        return c;
      }
      return compare_lex(u, v);
    }

    std::string name() const {
      if (kind_ == Kind::DegLex) {
        return "deglex";
      }
      return comm_ == CommOrder::deglex() ? "eps-lift"
                                          : "eps-lift(" + comm_.name() + ")";
    }

    constexpr bool operator==(FreeOrder const&) const = default;

   private:
    Kind      kind_ = Kind::DegLex;
    CommOrder comm_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Orders on N = X*Y*
  ////////////////////////////////////////////////////////////////////////

  class TensorOrder {
   public:
    enum class Kind { Product, Lifted };

    constexpr TensorOrder() = default;

    // X part first, then Y part.
    static constexpr TensorOrder product(FreeOrder x = FreeOrder::deglex(),
                                         FreeOrder y = FreeOrder::deglex()) {
      TensorOrder o;
      o.x_ = x;
      o.y_ = y;
      return o;
    }

    static constexpr TensorOrder deglex() {
      return product();
    }

    // (gamma(u^X), u^Y) under the Y-first mixed order, then u^X
    // lexicographically.
    static constexpr TensorOrder lifted(CommOrder comm = CommOrder::deglex(),
                                        FreeOrder y = FreeOrder::deglex()) {
      TensorOrder o;
      o.kind_ = Kind::Lifted;
      o.comm_ = comm;
      o.y_    = y;
      return o;
    }

    constexpr Kind kind() const noexcept {
      return kind_;
    }
    constexpr FreeOrder x_order() const noexcept {
      return x_;
    }
    constexpr FreeOrder y_order() const noexcept {
      return y_;
    }
    constexpr CommOrder comm() const noexcept {
      return comm_;
    }

    // True when a larger total degree always means a larger monomial.
    bool is_graded() const noexcept {
      return false;
    }

    std::strong_ordering compare(NormalWord const& u,
                                 NormalWord const& v) const {
      if (kind_ == Kind::Product) {
        auto c = x_.compare(u.x, v.x);
        return c != 0 ? c : y_.compare(u.y, v.y);
      }
      auto c = y_.compare(u.y, v.y);
      if (c != 0) {
        return c;
      }
      c = comm_.compare(gamma(u.x), gamma(v.x));
      return c != 0 ? c : compare_lex(u.x, v.x);
    }

    std::string name() const {
      if (kind_ == Kind::Product) {
        return "tensor(" + x_.name() + "," + y_.name() + ")";
      }
      return comm_ == CommOrder::deglex()
                 ? "lifted-tensor"
                 : "lifted-tensor(" + comm_.name() + ")";
    }

    constexpr bool operator==(TensorOrder const&) const = default;

   private:
    Kind      kind_ = Kind::Product;
    FreeOrder x_;
    FreeOrder y_;
    CommOrder comm_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Order on [X]Y*: Y part first, then X part
  ////////////////////////////////////////////////////////////////////////

  class MixedOrder {
   public:
    constexpr MixedOrder() = default;
    constexpr explicit MixedOrder(CommOrder x, FreeOrder y = FreeOrder::deglex())
        : x_(x), y_(y) {}

    static constexpr MixedOrder yfirst(CommOrder x = CommOrder::deglex()) {
      return MixedOrder(x);
    }

    constexpr CommOrder x_order() const noexcept {
      return x_;
    }
    constexpr FreeOrder y_order() const noexcept {
      return y_;
    }

    bool is_graded() const noexcept {
      return false;
    }

    std::strong_ordering compare(MixedMonomial const& u,
                                 MixedMonomial const& v) const {
      auto c = y_.compare(u.y, v.y);
      return c != 0 ? c : x_.compare(u.x, v.x);
    }

    std::string name() const {
      return x_ == CommOrder::deglex() ? "mixed-yfirst"
                                       : "mixed-yfirst(" + x_.name() + ")";
    }

    constexpr bool operator==(MixedOrder const&) const = default;

   private:
    CommOrder x_;
    FreeOrder y_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Universe traits
  ////////////////////////////////////////////////////////////////////////

  template <typename M>
  struct OrderFor;

  template <>
  struct OrderFor<Word> {
    using type = FreeOrder;
  };
  template <>
  struct OrderFor<CommMonomial> {
    using type = CommOrder;
  };
  template <>
  struct OrderFor<NormalWord> {
    using type = TensorOrder;
  };
  template <>
  struct OrderFor<MixedMonomial> {
    using type = MixedOrder;
  };

  template <typename M>
  using order_t = typename OrderFor<M>::type;

  // Strict "less" adaptor for ordered containers.
  template <typename M>
  struct OrderLess {
    order_t<M> order;
    bool operator()(M const& a, M const& b) const {
      return order.compare(a, b) < 0;
    }
  };

  template <typename M>
  struct OrderGreater {
    order_t<M> order;
    bool operator()(M const& a, M const& b) const {
      return order.compare(a, b) > 0;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Convenience comparisons matching the lifted constructions
  ////////////////////////////////////////////////////////////////////////

  inline std::strong_ordering cmp_eps(FreeOrder const& order,
                                      Word const&      u,
                                      Word const&      v) {
    if (order.kind() != FreeOrder::Kind::Eps) {
      throw OrderMismatch("cmp_eps needs an eps-lift order");
    }
    return order.compare(u, v);
  }

  inline std::strong_ordering cmp_lifted_tensor(TensorOrder const& order,
                                                NormalWord const&  u,
                                                NormalWord const&  v) {
    if (order.kind() != TensorOrder::Kind::Lifted) {
      throw OrderMismatch("cmp_lifted_tensor needs a lifted-tensor order");
    }
    return order.compare(u, v);
  }

}  // namespace gsb
