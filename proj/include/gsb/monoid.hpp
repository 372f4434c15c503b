#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsb/error.hpp"

namespace gsb {

  using Letter = std::uint16_t;

  enum class Side { X, Y };

  // A finite, linearly ordered set of generator names. The order is the
  // declaration order: letter i < letter j iff i < j.
  class Alphabet {
   public:
    Alphabet() = default;

    Alphabet(Side side, std::vector<std::string> names)
        : side_(side), names_(std::move(names)) {
      for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (names_[i] == names_[j]) {
            throw Error("duplicate generator '" + names_[i] + "'");
          }
        }
      }
    }

    // x1 < x2 < ... < xn
    static Alphabet numbered(Side side, std::size_t n) {
      std::vector<std::string> names;
      for (std::size_t i = 1; i <= n; ++i) {
        names.push_back((side == Side::X ? "x" : "y") + std::to_string(i));
      }
      return Alphabet(side, std::move(names));
    }

    Side side() const noexcept {
      return side_;
    }

    std::size_t size() const noexcept {
      return names_.size();
    }

    std::string const& name(Letter l) const {
      return names_.at(l);
    }

    std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    std::optional<Letter> find(std::string const& name) const {
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) {
        return std::nullopt;
      }
      return static_cast<Letter>(it - names_.begin());
    }

    bool operator==(Alphabet const&) const = default;

   private:
    Side                     side_ = Side::X;
    std::vector<std::string> names_;
  };

  // The two alphabets an algebra is built on; y is empty for k<X> and k[X].
  struct Signature {
    Alphabet x{Side::X, {}};
    Alphabet y{Side::Y, {}};

    bool operator==(Signature const&) const = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Word: an element of the free monoid on an alphabet
  ////////////////////////////////////////////////////////////////////////

  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    template <typename It>
    Word(It first, It last) : letters_(first, last) {}

    std::size_t size() const noexcept {
      return letters_.size();
    }

    bool empty() const noexcept {
      return letters_.empty();
    }

    Letter operator[](std::size_t i) const {
      return letters_[i];
    }

    auto begin() const noexcept {
      return letters_.begin();
    }

    auto end() const noexcept {
      return letters_.end();
    }

    std::vector<Letter> const& letters() const noexcept {
      return letters_;
    }

    Word prefix(std::size_t n) const {
      return Word(letters_.begin(), letters_.begin() + n);
    }

    Word suffix_from(std::size_t pos) const {
      return Word(letters_.begin() + pos, letters_.end());
    }

    Word subword(std::size_t pos, std::size_t len) const {
      return Word(letters_.begin() + pos, letters_.begin() + pos + len);
    }

    Word& operator*=(Word const& other) {
      letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
      return *this;
    }

    Word& push_back(Letter l) {
      letters_.push_back(l);
      return *this;
    }

    void pop_back() {
      letters_.pop_back();
    }

    friend Word operator*(Word a, Word const& b) {
      return a *= b;
    }

    bool ends_with(Word const& v) const {
      return v.size() <= size()
             && std::equal(v.begin(), v.end(), end() - v.size());
    }

    bool operator==(Word const&) const = default;
    // Container order only (used for keys); monomial orders live in order.hpp.
    auto operator<=>(Word const&) const = default;

   private:
    std::vector<Letter> letters_;
  };

  // Positions p with u[p, p + |v|) == v, left to right. For empty v every
  // position 0..|u| qualifies.
  inline std::vector<std::size_t> occurrences(Word const& u, Word const& v) {
    std::vector<std::size_t> out;
    if (v.size() > u.size()) {
      return out;
    }
    for (std::size_t p = 0; p + v.size() <= u.size(); ++p) {
      if (std::equal(v.begin(), v.end(), u.begin() + p)) {
        out.push_back(p);
      }
    }
    return out;
  }

  inline std::optional<std::size_t> first_occurrence(Word const& u,
                                                     Word const& v) {
    if (v.size() > u.size()) {
      return std::nullopt;
    }
    auto it = std::search(u.begin(), u.end(), v.begin(), v.end());
    if (it == u.end() && !v.empty()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - u.begin());
  }

  inline bool is_subword(Word const& v, Word const& u) {
    return first_occurrence(u, v).has_value();
  }

  // All (a, b) with u = a v b.
  inline std::vector<std::pair<Word, Word>> factorizations(Word const& u,
                                                           Word const& v) {
    std::vector<std::pair<Word, Word>> out;
    for (auto p : occurrences(u, v)) {
      out.emplace_back(u.prefix(p), u.suffix_from(p + v.size()));
    }
    return out;
  }

  // All (b, a) with u a = b v and 0 < overlap < min(|u|, |v|): a proper
  // nonempty suffix of u equal to a proper prefix of v. Ordered by
  // increasing overlap length.
  inline std::vector<std::pair<Word, Word>> overlaps(Word const& u,
                                                     Word const& v) {
    std::vector<std::pair<Word, Word>> out;
    std::size_t const m = std::min(u.size(), v.size());
    for (std::size_t k = 1; k < m; ++k) {
      if (std::equal(u.end() - k, u.end(), v.begin())) {
        out.emplace_back(u.prefix(u.size() - k), v.suffix_from(k));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // CommMonomial: an element of the free commutative monoid [X]
  ////////////////////////////////////////////////////////////////////////

  class CommMonomial {
   public:
    CommMonomial() = default;

    // Exponents of x_0, x_1, ...; trailing zeros are dropped.
    explicit CommMonomial(std::vector<std::uint32_t> exps)
        : exps_(std::move(exps)) {
      trim();
    }

    static CommMonomial variable(Letter l, std::uint32_t power = 1) {
      std::vector<std::uint32_t> e(l + 1, 0);
      e[l] = power;
      return CommMonomial(std::move(e));
    }

    std::uint32_t exponent(std::size_t i) const noexcept {
      return i < exps_.size() ? exps_[i] : 0;
    }

    // One past the largest variable index with nonzero exponent.
    std::size_t support_end() const noexcept {
      return exps_.size();
    }

    std::vector<std::uint32_t> const& exponents() const noexcept {
      return exps_;
    }

    std::size_t degree() const noexcept {
      std::size_t d = 0;
      for (auto e : exps_) {
        d += e;
      }
      return d;
    }

    bool is_one() const noexcept {
      return exps_.empty();
    }

    std::optional<Letter> min_variable() const noexcept {
      for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] != 0) {
          return static_cast<Letter>(i);
        }
      }
      return std::nullopt;
    }

    std::optional<Letter> max_variable() const noexcept {
      if (exps_.empty()) {
        return std::nullopt;
      }
      return static_cast<Letter>(exps_.size() - 1);
    }

    bool divides(CommMonomial const& m) const noexcept {
      if (exps_.size() > m.exps_.size()) {
        return false;
      }
      for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > m.exps_[i]) {
          return false;
        }
      }
      return true;
    }

    // this / m; requires m | this.
    CommMonomial operator/(CommMonomial const& m) const {
      if (!m.divides(*this)) {
        throw Error("monomial quotient is not exact");
      }
      std::vector<std::uint32_t> e(exps_);
      for (std::size_t i = 0; i < m.exps_.size(); ++i) {
        e[i] -= m.exps_[i];
      }
      return CommMonomial(std::move(e));
    }

    CommMonomial& operator*=(CommMonomial const& m) {
      if (m.exps_.size() > exps_.size()) {
        exps_.resize(m.exps_.size(), 0);
      }
      for (std::size_t i = 0; i < m.exps_.size(); ++i) {
        exps_[i] += m.exps_[i];
      }
      return *this;
    }

    friend CommMonomial operator*(CommMonomial a, CommMonomial const& b) {
      return a *= b;
    }

    bool operator==(CommMonomial const&) const = default;
    auto operator<=>(CommMonomial const&) const = default;

   private:
    void trim() {
      while (!exps_.empty() && exps_.back() == 0) {
        exps_.pop_back();
      }
    }

    std::vector<std::uint32_t> exps_;
  };

  // Exponentwise max and min.
  inline std::pair<CommMonomial, CommMonomial>
  comm_lcm_gcd(CommMonomial const& m, CommMonomial const& n) {
    std::size_t const len = std::max(m.support_end(), n.support_end());
    std::vector<std::uint32_t> lcm(len), gcd(len);
    for (std::size_t i = 0; i < len; ++i) {
      lcm[i] = std::max(m.exponent(i), n.exponent(i));
      gcd[i] = std::min(m.exponent(i), n.exponent(i));
    }
    return {CommMonomial(std::move(lcm)), CommMonomial(std::move(gcd))};
  }

  ////////////////////////////////////////////////////////////////////////
  // NormalWord: u = u^X u^Y in N = X*Y*, the monomials of k<X> (x) k<Y>
  ////////////////////////////////////////////////////////////////////////

  struct NormalWord {
    Word x;
    Word y;

    std::size_t degree() const noexcept {
      return x.size() + y.size();
    }

    bool is_one() const noexcept {
      return x.empty() && y.empty();
    }

    // uv = u^X v^X u^Y v^Y
    NormalWord& operator*=(NormalWord const& v) {
      x *= v.x;
      y *= v.y;
      return *this;
    }

    friend NormalWord operator*(NormalWord u, NormalWord const& v) {
      return u *= v;
    }

    bool operator==(NormalWord const&) const = default;
    auto operator<=>(NormalWord const&) const = default;
  };

  // Same as operator* on words.
  inline NormalWord concat(NormalWord const& u, NormalWord const& v) {
    return u * v;
  }

  ////////////////////////////////////////////////////////////////////////
  // MixedMonomial: u = u^X u^Y in [X]Y*, the monomials of k[X] (x) k<Y>
  ////////////////////////////////////////////////////////////////////////

  struct MixedMonomial {
    CommMonomial x;
    Word         y;

    std::size_t degree() const noexcept {
      return x.degree() + y.size();
    }

    bool is_one() const noexcept {
      return x.is_one() && y.empty();
    }

    MixedMonomial& operator*=(MixedMonomial const& v) {
      x *= v.x;
      y *= v.y;
      return *this;
    }

    friend MixedMonomial operator*(MixedMonomial u, MixedMonomial const& v) {
      return u *= v;
    }

    bool operator==(MixedMonomial const&) const = default;
    auto operator<=>(MixedMonomial const&) const = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Two-sided multiplication and divisibility, per universe
  ////////////////////////////////////////////////////////////////////////

  inline NormalWord mul(NormalWord const& a,
                        NormalWord const& m,
                        NormalWord const& b) {
    return NormalWord{a.x * m.x * b.x, a.y * m.y * b.y};
  }

  inline MixedMonomial mul(MixedMonomial const& a,
                           MixedMonomial const& m,
                           MixedMonomial const& b) {
    return MixedMonomial{a.x * m.x * b.x, a.y * m.y * b.y};
  }

  // All (a, b) with a s b = w. In the mixed universe the commutative
  // cofactor is put entirely into a.
  inline std::vector<std::pair<NormalWord, NormalWord>>
  embeddings(NormalWord const& w, NormalWord const& s) {
    std::vector<std::pair<NormalWord, NormalWord>> out;
    auto const xs = factorizations(w.x, s.x);
    if (xs.empty()) {
      return out;
    }
    auto const ys = factorizations(w.y, s.y);
    for (auto const& [ax, bx] : xs) {
      for (auto const& [ay, by] : ys) {
        out.push_back({NormalWord{ax, ay}, NormalWord{bx, by}});
      }
    }
    return out;
  }

  inline std::vector<std::pair<MixedMonomial, MixedMonomial>>
  embeddings(MixedMonomial const& w, MixedMonomial const& s) {
    std::vector<std::pair<MixedMonomial, MixedMonomial>> out;
    if (!s.x.divides(w.x)) {
      return out;
    }
    CommMonomial const t = w.x / s.x;
    for (auto const& [c, d] : factorizations(w.y, s.y)) {
      out.push_back({MixedMonomial{t, c}, MixedMonomial{CommMonomial(), d}});
    }
    return out;
  }

  // Leftmost embedding (leftmost X position, then leftmost Y position).
  inline std::optional<std::pair<NormalWord, NormalWord>>
  first_embedding(NormalWord const& w, NormalWord const& s) {
    if (s.x.size() > w.x.size() || s.y.size() > w.y.size()) {
      return std::nullopt;
    }
    auto px = first_occurrence(w.x, s.x);
    if (!px) {
      return std::nullopt;
    }
    auto py = first_occurrence(w.y, s.y);
    if (!py) {
      return std::nullopt;
    }
    return std::pair{NormalWord{w.x.prefix(*px), w.y.prefix(*py)},
                     NormalWord{w.x.suffix_from(*px + s.x.size()),
                                w.y.suffix_from(*py + s.y.size())}};
  }

  inline std::optional<std::pair<MixedMonomial, MixedMonomial>>
  first_embedding(MixedMonomial const& w, MixedMonomial const& s) {
    if (s.y.size() > w.y.size() || !s.x.divides(w.x)) {
      return std::nullopt;
    }
    auto py = first_occurrence(w.y, s.y);
    if (!py) {
      return std::nullopt;
    }
    return std::pair{MixedMonomial{w.x / s.x, w.y.prefix(*py)},
                     MixedMonomial{CommMonomial(),
                                   w.y.suffix_from(*py + s.y.size())}};
  }

  // Identity of each universe.
  template <typename M>
  M one() {
    return M{};
  }

  inline std::size_t degree(Word const& w) {
    return w.size();
  }
  inline std::size_t degree(CommMonomial const& m) {
    return m.degree();
  }
  inline std::size_t degree(NormalWord const& u) {
    return u.degree();
  }
  inline std::size_t degree(MixedMonomial const& u) {
    return u.degree();
  }

  inline Word mul(Word const& a, Word const& m, Word const& b) {
    return a * m * b;
  }
  inline CommMonomial mul(CommMonomial const& a,
                          CommMonomial const& m,
                          CommMonomial const& b) {
    return a * m * b;
  }

  inline std::vector<std::pair<Word, Word>> embeddings(Word const& w,
                                                       Word const& s) {
    return factorizations(w, s);
  }
  inline std::optional<std::pair<Word, Word>> first_embedding(Word const& w,
                                                              Word const& s) {
    auto p = first_occurrence(w, s);
    if (!p) {
      return std::nullopt;
    }
    return std::pair{w.prefix(*p), w.suffix_from(*p + s.size())};
  }
  inline std::vector<std::pair<CommMonomial, CommMonomial>>
  embeddings(CommMonomial const& w, CommMonomial const& s) {
    if (!s.divides(w)) {
      return {};
    }
    return {{w / s, CommMonomial()}};
  }
  inline std::optional<std::pair<CommMonomial, CommMonomial>>
  first_embedding(CommMonomial const& w, CommMonomial const& s) {
    if (!s.divides(w)) {
      return std::nullopt;
    }
    return std::pair{w / s, CommMonomial()};
  }

  template <typename M>
  bool divides(M const& s, M const& w) {
    return first_embedding(w, s).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Abelianization and its lexicographic section
  ////////////////////////////////////////////////////////////////////////

  inline CommMonomial gamma(Word const& u) {
    std::vector<std::uint32_t> e;
    for (auto l : u) {
      if (l >= e.size()) {
        e.resize(l + 1, 0);
      }
      ++e[l];
    }
    return CommMonomial(std::move(e));
  }

  // The ascending word with the given letter counts.
  inline Word delta(CommMonomial const& m) {
    Word out;
    for (std::size_t i = 0; i < m.support_end(); ++i) {
      for (std::uint32_t k = 0; k < m.exponent(i); ++k) {
        out.push_back(static_cast<Letter>(i));
      }
    }
    return out;
  }

  inline MixedMonomial gamma(NormalWord const& u) {
    return MixedMonomial{gamma(u.x), u.y};
  }

  inline NormalWord delta(MixedMonomial const& m) {
    return NormalWord{delta(m.x), m.y};
  }

  ////////////////////////////////////////////////////////////////////////
  // Hashing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::size_t hash_combine(std::size_t seed, std::size_t v) noexcept {
      return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    }

    template <typename Range>
    std::size_t hash_range(Range const& r, std::size_t seed) noexcept {
      for (auto v : r) {
        seed = hash_combine(seed, static_cast<std::size_t>(v));
      }
      return hash_combine(seed, r.size());
    }
  }  // namespace detail

  struct MonomialHash {
    std::size_t operator()(Word const& w) const noexcept {
      return detail::hash_range(w, 0);
    }
    std::size_t operator()(CommMonomial const& m) const noexcept {
      return detail::hash_range(m.exponents(), 1);
    }
    std::size_t operator()(NormalWord const& u) const noexcept {
      return detail::hash_combine((*this)(u.x), (*this)(u.y));
    }
    std::size_t operator()(MixedMonomial const& u) const noexcept {
      return detail::hash_combine((*this)(u.x), (*this)(u.y));
    }
  };

}  // namespace gsb
