// A short tour: complete a presentation, count normal words, lift a
// commutative basis into the free algebra and compare quotient dimensions.

#include <iostream>

#include "gsb/gsb.hpp"

using namespace gsb;

namespace {
  int failures = 0;

  void expect(bool ok, std::string const& what) {
    std::cout << (ok ? "  ok    " : "  FAIL  ") << what << "\n";
    failures += ok ? 0 : 1;
  }
}  // namespace

int main() {
  std::cout << "1. k[x1,x2] (x) k<y1, y2> inside k<x1,x2> (x) k<y1,y2>\n";
  auto const p = parse_presentation(
      "alphabet X: x1 < x2\n"
      "alphabet Y: y1 < y2\n"
      "universe tensor\n"
      "rel x2*x1 = x1*x2\n");
  CompletionConfig cfg;
  cfg.max_degree = 6;
  auto const st  = complete(p.tensor_rels, p.field, p.tensor_order, p.sig, cfg);
  std::cout << st.summary();
  for (std::size_t d = 0; d <= 4; ++d) {
    // commutative monomials in two variables times words in two letters
    std::size_t want = 0;
    for (std::size_t i = 0; i <= d; ++i) {
      want += (i + 1) << (d - i);
    }
    expect(irr(st, d).size() == want,
           "degree " + std::to_string(d) + ": " + std::to_string(irr(st, d).size()) + " normal words");
  }
  auto const f = parse_polynomial<NormalWord>(p, "x2*x1*x2;y2*y1 - x1*x2^2;y2*y1");
  expect(word_problem(f, st), "x2 x1 x2 y2 y1 = x1 x2^2 y2 y1");

  std::cout << "\n2. lifting x1 x3 - x2^2 from k[x1,x2,x3] to k<x1,x2,x3>\n";
  auto const c = parse_presentation(
      "alphabet X: x1 < x2 < x3\n"
      "universe commutative\n"
      "rel x1*x3 = x2^2\n");
  LiftConfig lcfg;
  lcfg.cap       = 6;
  auto const out = eps_lift(c.comm_rels, c.field, c.comm_order, c.sig, lcfg);
  for (auto const& r : out.relations) {
    std::cout << "  " << r.to_string(c.sig) << "\n";
  }
  for (auto const& w : out.warnings) {
    std::cout << "  " << w << "\n";
  }
  FreeOrder const eps  = FreeOrder::eps(c.comm_order);
  auto const      chk  = check(out.relations, c.field, eps, c.sig, cfg);
  expect(chk.failures.empty(), "lifted relations are closed under compositions up to degree 6");
  auto const dims = quotient_dim(out.relations, c.sig, c.field, eps, 6);
  for (std::size_t d = 0; d <= 6; ++d) {
    auto const std_monomials = irr(c.comm_rels, c.sig, c.comm_order, d).size();
    expect(dims[d] == mpz_class(std_monomials),
           "degree " + std::to_string(d) + ": quotient dimension " + dims[d].get_str()
               + ", standard monomials " + std::to_string(std_monomials));
  }

  std::cout << "\n" << (failures == 0 ? "all checks passed" : "some checks failed") << "\n";
  return failures == 0 ? 0 : 1;
}
