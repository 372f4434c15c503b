#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace gsb;
using gsb::testing::Rng;
using gsb::testing::poly;
using gsb::testing::uniform;

namespace {
  Field const Q = Field::rationals();

  template <typename M>
  void lead_of_products(order_t<M> const& order, Signature const& sig, std::uint64_t seed) {
    Rng rng(seed);
    for (int i = 0; i < 1000; ++i) {
      auto const f = gsb::testing::random_polynomial<M>(rng, Q, order, sig, uniform(rng, 1, 5), 5);
      if (f.is_zero()) {
        continue;
      }
      M const a = gsb::testing::random_monomial_upto<M>(rng, sig, 3);
      M const b = gsb::testing::random_monomial_upto<M>(rng, sig, 3);
      auto const g = mono_mul(a, f, b);
      REQUIRE(g.lead_monomial() == mul(a, f.lead_monomial(), b));
      REQUIRE(g == Polynomial<M>::normalize(Q, order, g.terms()));
    }
  }

  template <typename M>
  void ring_axioms(order_t<M> const& order, Signature const& sig, Field k, std::uint64_t seed) {
    Rng rng(seed);
    for (int i = 0; i < 500; ++i) {
      auto const f = gsb::testing::random_polynomial<M>(rng, k, order, sig, uniform(rng, 0, 5), 6);
      auto const g = gsb::testing::random_polynomial<M>(rng, k, order, sig, uniform(rng, 0, 5), 6);
      auto const h = gsb::testing::random_polynomial<M>(rng, k, order, sig, uniform(rng, 0, 5), 6);
      auto const c = gsb::testing::random_scalar(rng, k, false);
      REQUIRE((f + g) + h == f + (g + h));
      REQUIRE(f + g == g + f);
      REQUIRE((f - f).is_zero());
      REQUIRE(c * (f + g) == c * f + c * g);
      REQUIRE(scalar_mul(Scalar::zero(k), f).is_zero());
      REQUIRE(mono_mul(one<M>(), f, one<M>()) == f);
    }
  }
}  // namespace

TEST_CASE("normalize merges, drops zeros and sorts") {
  Signature const sig = gsb::testing::numbered(2);
  FreeOrder const o;
  Word const      u{0}, v{1};
  CHECK((Polynomial<Word>::normalize(Q, o, {{Scalar(Q, 1L), u}, {Scalar(Q, -1L), u}}).is_zero()));
  auto const p = Polynomial<Word>::normalize(Q, o, {{Scalar(Q, 2L), u}, {Scalar(Q, 3L), v}});
  REQUIRE(p.size() == 2);
  CHECK((p.terms()[0] == Term<Word>{Scalar(Q, 3L), v}));
  CHECK((p.terms()[1] == Term<Word>{Scalar(Q, 2L), u}));
  auto const half = Scalar::parse(Q, "1/2");
  CHECK((Polynomial<Word>::normalize(Q, o, {{half, u}, {half, u}})
        == Polynomial<Word>::monomial(Q, o, u)));
}

TEST_CASE("leading term") {
  Signature const sig = gsb::testing::numbered(2, 1);
  auto const      f   = poly<NormalWord>("x2;y1 + x1", sig);
  CHECK((f.lead_monomial() == NormalWord{Word{1}, Word{0}}));
  CHECK(f.lead_coeff().is_one());
  auto const g = poly<NormalWord>("3*x1 - 2*x2*x1;y1", sig);
  CHECK(g.monic().lead_coeff().is_one());
  CHECK(g.monic().to_string(sig) == "x2*x1;y1 - 3/2*x1");
  CHECK_THROWS_AS(Polynomial<NormalWord>(Q, TensorOrder{}).lead(), ZeroPolynomial);
}

TEST_CASE("two-sided monomial multiplication") {
  Signature const  sig = gsb::testing::numbered(2, 2);
  auto const       f   = poly<NormalWord>("x2;y1 - y1", sig);
  NormalWord const a{Word{0}, {}};
  NormalWord const b{{}, Word{1}};
  CHECK(mono_mul(a, f, b) == poly<NormalWord>("x1*x2;y1*y2 - x1;y1*y2", sig));
  CHECK((mono_mul(NormalWord{}, f, NormalWord{}) == f));
}

TEST_CASE("text form") {
  Signature const sig = gsb::testing::numbered(2, 1);
  auto const      f   = poly<NormalWord>("3/2*x1*x2;y1 - x1;y1 + 1", sig);
  CHECK(f.to_string(sig) == "3/2*x1*x2;y1 - x1;y1 + 1");
  CHECK(poly<NormalWord>("x1*x1*x2 - x2^2", sig).to_string(sig) == "x1^2*x2 - x2^2");
  Signature const csig = gsb::testing::numbered(3);
  CHECK(poly<CommMonomial>("x3*x1*x1 - x2", csig).to_string(csig) == "x1^2*x3 - x2");
  CHECK((Polynomial<Word>(Q, FreeOrder{}).to_string() == "0"));
}

TEST_CASE("orders and fields must match") {
  Signature const sig = gsb::testing::numbered(2);
  auto const f = poly<Word>("x1*x2", sig, FreeOrder::deglex());
  auto const g = poly<Word>("x1*x2", sig, FreeOrder::eps());
  auto const h = poly<Word>("x1*x2", sig, FreeOrder::deglex(), Field::prime(7));
  CHECK_THROWS_AS(f + g, OrderMismatch);
  CHECK_THROWS_AS(f + h, FieldMismatch);
  CHECK(reorder(f, FreeOrder::eps()) == g);
}

TEST_CASE("leading monomial commutes with monomial multiplication") {
  Signature const free = gsb::testing::numbered(3);
  Signature const tens = gsb::testing::numbered(2, 2);
  lead_of_products<Word>(FreeOrder::deglex(), free, 1);
  lead_of_products<Word>(FreeOrder::eps(), free, 2);
  lead_of_products<CommMonomial>(CommOrder::degrevlex(), free, 3);
  lead_of_products<CommMonomial>(CommOrder::lex(), free, 4);
  lead_of_products<NormalWord>(TensorOrder::deglex(), tens, 5);
  lead_of_products<NormalWord>(TensorOrder::lifted(), tens, 6);
  lead_of_products<MixedMonomial>(MixedOrder::yfirst(), tens, 7);
}

TEST_CASE("ring axioms on random triples") {
  Signature const free = gsb::testing::numbered(3);
  Signature const tens = gsb::testing::numbered(2, 2);
  ring_axioms<Word>(FreeOrder::deglex(), free, Q, 11);
  ring_axioms<CommMonomial>(CommOrder::deglex(), free, Field::prime(5), 12);
  ring_axioms<NormalWord>(TensorOrder::deglex(), tens, Q, 13);
  ring_axioms<MixedMonomial>(MixedOrder::yfirst(), tens, Field::prime(101), 14);
}
