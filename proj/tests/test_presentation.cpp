#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace gsb;

namespace {
  char const* const commuting_x = R"(# commuting X, free Y
field Q
alphabet X: x1 < x2
alphabet Y: y1
universe tensor
rel y1*x1 - x1*y1
rel y1*x2 - x2*y1
rel x2*x1 - x1*x2
)";

  template <typename E>
  E parse_error(std::string const& text) {
    try {
      parse_presentation(text);
    } catch (E const& e) {
      return e;
    }
    FAIL("expected a parse error");
    throw;
  }
}  // namespace

TEST_CASE("the commuting-X presentation") {
  auto const p = parse_presentation(commuting_x);
  CHECK(p.universe == Universe::Tensor);
  CHECK(p.field.is_rational());
  CHECK((p.sig.x.names() == std::vector<std::string>{"x1", "x2"}));
  CHECK((p.sig.y.names() == std::vector<std::string>{"y1"}));
  REQUIRE(p.tensor_rels.size() == 1);
  CHECK((p.zero_relation_lines == std::vector<std::size_t>{6, 7}));
  CHECK(p.tensor_rels[0].to_string(p.sig) == "x2*x1 - x1*x2");
  CHECK(p.order_name() == "tensor(deglex,deglex)");
  CompletionConfig cfg;
  cfg.max_degree = 6;
  auto const st = complete(p.relations<NormalWord>(), p.field, p.order<NormalWord>(), p.sig, cfg);
  CHECK(st.added == 0);
  CHECK(irr(st, 2).size() == 6);
}

TEST_CASE("free universe joins both alphabets") {
  auto const p = parse_presentation("alphabet X: x\nalphabet Y: y\nuniverse free\nrel y*x = x*y\n");
  CHECK(p.universe == Universe::Free);
  CHECK((p.sig.x.names() == std::vector<std::string>{"x", "y"}));
  REQUIRE(p.free_rels.size() == 1);
  CHECK(p.free_rels[0].to_string(p.sig) == "y*x - x*y");
  CHECK(p.relation_count() == 1);
}

TEST_CASE("defaults and empty relation lists") {
  auto const p = parse_presentation("alphabet X: a < b\n");
  CHECK(p.universe == Universe::Free);
  CHECK(p.free_rels.empty());
  CHECK(p.relation_count() == 0);
  auto const t = parse_presentation("alphabet X: a\nalphabet Y: b\n");
  CHECK(t.universe == Universe::Tensor);
  CHECK(t.tensor_rels.empty());
}

TEST_CASE("fields, orders and universes") {
  auto const p = parse_presentation("field F<7>\nalphabet X: x1 < x2 < x3\nuniverse commutative\norder degrevlex\nrel x1*x3 - 8*x2^2\n");
  CHECK(p.field.characteristic() == 7);
  CHECK(p.universe == Universe::Commutative);
  CHECK(p.order_name() == "degrevlex");
  CHECK(p.comm_rels[0].to_string(p.sig) == "6*x2^2 + x1*x3");
  CHECK(parse_presentation("field F7\nalphabet X: x\n").field.characteristic() == 7);
  CHECK(parse_presentation("field: p=5\nalphabet X: x\n").field.characteristic() == 5);

  auto const m = parse_presentation("alphabet X: x1 < x2\nalphabet Y: y1\nuniverse mixed\norder mixed-yfirst(lex)\nrel x2*x1;y1 - x1*y1\n");
  CHECK(m.universe == Universe::Mixed);
  CHECK(m.mixed_rels[0].to_string(m.sig) == "x1*x2;y1 - x1;y1");
  auto const e = parse_presentation("alphabet X: x1 < x2\norder eps-lift(degrevlex)\n");
  CHECK(e.free_order == FreeOrder::eps(CommOrder::degrevlex()));
  auto const l = parse_presentation("alphabet X: x1\nalphabet Y: y1\norder lifted-tensor\n");
  CHECK(l.tensor_order == TensorOrder::lifted());
  auto const q = parse_presentation("alphabet X: x\nrel 1/2*x^2 + 1/3*x = 0\n");
  CHECK(q.free_rels[0].to_string(q.sig) == "1/2*x^2 + 1/3*x");
}

TEST_CASE("diagnostics carry line and column") {
  auto const u = parse_error<UnknownGenerator>("alphabet X: x1 < x2\nrel x1*x9 - x2\n");
  CHECK(u.line == 2);
  CHECK(u.column == 8);
  CHECK(std::string(u.what()).find("x9") != std::string::npos);

  auto const s = parse_error<SyntaxError>("alphabet X: x1\nrel x1 + * x1\n");
  CHECK(s.line == 2);
  CHECK(std::string(s.what()).rfind("2:", 0) == 0);

  CHECK(parse_error<SyntaxError>("alphabet X: x1\nfield F<8>\n").line == 2);
  CHECK(parse_error<SyntaxError>("alphabet X: x1\nuniverse weird\n").line == 2);
  CHECK(parse_error<SyntaxError>("relation x\n").line == 1);
  CHECK(parse_error<SyntaxError>("# nothing\n").column == 1);
  CHECK(parse_error<SyntaxError>("alphabet X: x\nalphabet Y: y\nuniverse commutative\n").line >= 1);
  CHECK(parse_error<SyntaxError>("alphabet X: x < x\n").line >= 1);
  CHECK(parse_error<SyntaxError>("alphabet X: x\nrel x^\n").line == 2);
  CHECK(parse_error<SyntaxError>("alphabet X: x\nrel x/0\n").line == 2);

  auto const o = parse_error<OrderSpecMismatch>("alphabet X: x1\nalphabet Y: y1\nuniverse tensor\norder degrevlex\n");
  CHECK(o.line == 4);
  CHECK(parse_error<OrderSpecMismatch>("alphabet X: x1\norder tensor(deglex,deglex)\n").line == 2);
}

TEST_CASE("rendered presentations parse back to the same presentation") {
  std::vector<std::string> const texts{
      commuting_x,
      "field F<11>\nalphabet X: a < b\nuniverse free\norder eps-lift(lex)\nrel b*a - 3*a*b + 1\nrel a^3 = b\n",
      "alphabet X: x1 < x2 < x3\nuniverse commutative\norder lex\nrel x1*x3 - x2^2\n",
      "alphabet X: x1 < x2\nalphabet Y: y1 < y2\nuniverse mixed\nrel x1*x2;y2*y1 - y1\nrel x1;y2 - 2/3\n",
      "alphabet X: x1\nalphabet Y: y1\norder lifted-tensor(degrevlex)\nrel x1^2;y1 - y1^2\n",
  };
  for (auto const& t : texts) {
    auto const p = parse_presentation(t);
    auto const r = render_presentation(p);
    INFO(r);
    auto const q = parse_presentation(r);
    CHECK(q == p);
    CHECK(render_presentation(q) == r);
  }
}

TEST_CASE("single polynomials") {
  Presentation p;
  p.sig = gsb::testing::numbered(2, 1);
  CHECK(parse_polynomial<NormalWord>(p, "y1*x2 + x1").to_string(p.sig) == "x2;y1 + x1");
  CHECK(parse_polynomial<NormalWord>(p, "x1 = x1").is_zero());
  CHECK_THROWS_AS(parse_polynomial<NormalWord>(p, "x3"), UnknownGenerator);
}
