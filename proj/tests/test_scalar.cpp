#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace gsb;
using gsb::testing::Rng;

TEST_CASE("rational arithmetic is exact and canonical") {
  Field const Q = Field::rationals();
  auto const  half  = Scalar::parse(Q, "1/2");
  auto const  third = Scalar::parse(Q, "1/3");
  CHECK(half + third == Scalar::parse(Q, "5/6"));
  CHECK((half + third).to_string() == "5/6");
  CHECK(Scalar::parse(Q, "4/8") == half);
  CHECK(Scalar::parse(Q, "-6/-4").to_string() == "3/2");
  CHECK(Scalar::parse(Q, "6/3").to_string() == "2");
  CHECK((half - half).is_zero());
  CHECK((-half).to_string() == "-1/2");
  CHECK(Scalar(Q, 3L).inverse() == third);
}

TEST_CASE("division by zero is reported") {
  Field const Q = Field::rationals();
  CHECK_THROWS_AS(Scalar::zero(Q).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar::one(Q) / Scalar::zero(Q), DivisionByZero);
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), DivisionByZero);
  Field const F5 = Field::prime(5);
  CHECK_THROWS_AS(Scalar(F5, 10L).inverse(), DivisionByZero);
}

TEST_CASE("prime field residues") {
  Field const F5 = Field::prime(5);
  CHECK(Scalar(F5, 3L) * Scalar(F5, 4L) == Scalar(F5, 2L));
  CHECK((Scalar(F5, 3L) * Scalar(F5, 4L)).to_string() == "2");
  CHECK(Scalar(F5, -1L).residue() == 4);
  CHECK(Scalar::parse(F5, "1/2") == Scalar(F5, 3L));
  CHECK(Scalar(F5, 2L).inverse() == Scalar(F5, 3L));
  CHECK_THROWS_AS(Field::prime(6), Error);
}

TEST_CASE("operands from different fields are rejected") {
  auto const a = Scalar::one(Field::rationals());
  auto const b = Scalar::one(Field::prime(7));
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(a * b, FieldMismatch);
  CHECK_THROWS_AS(Scalar::one(Field::prime(5)) - Scalar::one(Field::prime(7)),
                  FieldMismatch);
}

TEST_CASE("field axioms on random samples") {
  Rng rng(11);
  for (Field const k : {Field::rationals(), Field::prime(7), Field::prime(1000003)}) {
    for (int i = 0; i < 2000; ++i) {
      auto const a = gsb::testing::random_scalar(rng, k, false);
      auto const b = gsb::testing::random_scalar(rng, k, false);
      auto const c = gsb::testing::random_scalar(rng, k, false);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a - a == Scalar::zero(k));
      if (!a.is_zero()) {
        REQUIRE(a * a.inverse() == Scalar::one(k));
        REQUIRE((b / a) * a == b);
      }
      // canonical text form re-parses to the same value
      REQUIRE(Scalar::parse(k, a.to_string()) == a);
    }
  }
}

TEST_CASE("rationals keep a reduced form with positive denominator") {
  Rng rng(3);
  Field const Q = Field::rationals();
  for (int i = 0; i < 1000; ++i) {
    auto const a = gsb::testing::random_scalar(rng, Q, false)
                   * gsb::testing::random_scalar(rng, Q, false)
                   / gsb::testing::random_scalar(rng, Q, true);
    mpq_class const& q = a.rational();
    REQUIRE(q.get_den() > 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    REQUIRE((q.get_num() == 0 ? q.get_den() == 1 : g == 1));
  }
}
