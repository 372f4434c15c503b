#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "gsb/error.hpp"

namespace gsb {

  // The coefficient field: either the rationals or a prime field F_p.
  class Field {
   public:
    Field() = default;

    static Field rationals() {
      return Field();
    }

    static Field prime(std::uint64_t p) {
      if (!is_prime(p)) {
        throw Error(std::to_string(p) + " is not a prime");
      }
      Field f;
      f.p_ = p;
      return f;
    }

    bool is_rational() const noexcept {
      return p_ == 0;
    }

    // 0 for Q.
    std::uint64_t characteristic() const noexcept {
      return p_;
    }

    std::string to_string() const {
      return is_rational() ? "Q" : "F" + std::to_string(p_);
    }

    bool operator==(Field const&) const = default;

    static bool is_prime(std::uint64_t n) noexcept {
      if (n < 2) {
        return false;
      }
      for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }

   private:
    friend class Scalar;

    static Field unchecked(std::uint64_t p) {
      Field f;
      f.p_ = p;
      return f;
    }

    std::uint64_t p_ = 0;
  };

  // An exact field element. Rationals are kept canonical by GMP (reduced,
  // positive denominator); prime-field elements are residues in [0, p).
  class Scalar {
   public:
    Scalar() = default;

    Scalar(Field field, long value) : p_(field.characteristic()) {
      if (p_ == 0) {
        q_ = value;
      } else {
        long m = value % static_cast<long>(p_);
        r_ = static_cast<std::uint64_t>(m < 0 ? m + static_cast<long>(p_) : m);
      }
    }

    Scalar(Field field, mpq_class const& value) : p_(field.characteristic()) {
      if (p_ == 0) {
        q_ = value;
        q_.canonicalize();
      } else {
        *this = Scalar(field, mpz_class(value.get_num()))
                / Scalar(field, mpz_class(value.get_den()));
      }
    }

    Scalar(Field field, mpz_class const& value) : p_(field.characteristic()) {
      if (p_ == 0) {
        q_ = value;
      } else {
        mpz_class m = value % mpz_class(static_cast<unsigned long>(p_));
        if (m < 0) {
          m += static_cast<unsigned long>(p_);
        }
        r_ = m.get_ui();
      }
    }

    static Scalar zero(Field field) {
      return Scalar(field, 0L);
    }

    static Scalar one(Field field) {
      return Scalar(field, 1L);
    }

    // Accepts "n" or "n/d" with optional sign.
    static Scalar parse(Field field, std::string_view text) {
      std::string s(text);
      mpq_class q;
      if (s.empty() || q.set_str(s, 10) != 0) {
        throw Error("malformed coefficient '" + s + "'");
      }
      if (q.get_den() == 0) {
        throw DivisionByZero();
      }
      q.canonicalize();
      return Scalar(field, q);
    }

    Field field() const {
      return Field::unchecked(p_);
    }

    std::uint64_t characteristic() const noexcept {
      return p_;
    }

    bool is_zero() const {
      return p_ == 0 ? sgn(q_) == 0 : r_ == 0;
    }

    bool is_one() const {
      return p_ == 0 ? q_ == 1 : r_ == 1;
    }

    mpq_class const& rational() const noexcept {
      return q_;
    }

    std::uint64_t residue() const noexcept {
      return r_;
    }

    Scalar operator-() const {
      Scalar out = *this;
      if (p_ == 0) {
        out.q_ = -q_;
      } else if (r_ != 0) {
        out.r_ = p_ - r_;
      }
      return out;
    }

    Scalar& operator+=(Scalar const& other) {
      check_field(other);
      if (p_ == 0) {
        q_ += other.q_;
      } else {
        r_ = (r_ + other.r_) % p_;
      }
      return *this;
    }

    Scalar& operator-=(Scalar const& other) {
      return *this += -other;
    }

    Scalar& operator*=(Scalar const& other) {
      check_field(other);
      if (p_ == 0) {
        q_ *= other.q_;
      } else {
        r_ = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(r_) * other.r_) % p_);
      }
      return *this;
    }

    Scalar& operator/=(Scalar const& other) {
      return *this *= other.inverse();
    }

    Scalar inverse() const {
      if (is_zero()) {
        throw DivisionByZero();
      }
      Scalar out = *this;
      if (p_ == 0) {
        out.q_ = 1 / q_;
      } else {
        out.r_ = power_mod(r_, p_ - 2, p_);
      }
      return out;
    }

    friend Scalar operator+(Scalar a, Scalar const& b) {
      return a += b;
    }
    friend Scalar operator-(Scalar a, Scalar const& b) {
      return a -= b;
    }
    friend Scalar operator*(Scalar a, Scalar const& b) {
      return a *= b;
    }
    friend Scalar operator/(Scalar a, Scalar const& b) {
      return a /= b;
    }

    // Structural equality; raises FieldMismatch across fields.
    friend bool operator==(Scalar const& a, Scalar const& b) {
      a.check_field(b);
      return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
    }

    std::string to_string() const {
      return p_ == 0 ? q_.get_str() : std::to_string(r_);
    }

    friend std::ostream& operator<<(std::ostream& os, Scalar const& s) {
      return os << s.to_string();
    }

   private:
    void check_field(Scalar const& other) const {
      if (p_ != other.p_) {
        throw FieldMismatch();
      }
    }

    static std::uint64_t power_mod(std::uint64_t base,
                                   std::uint64_t exp,
                                   std::uint64_t mod) {
      unsigned __int128 result = 1, b = base % mod;
      while (exp > 0) {
        if (exp & 1) {
          result = (result * b) % mod;
        }
        b = (b * b) % mod;
        exp >>= 1;
      }
      return static_cast<std::uint64_t>(result);
    }

    std::uint64_t p_ = 0;
    mpq_class     q_;
    std::uint64_t r_ = 0;
  };

}  // namespace gsb
