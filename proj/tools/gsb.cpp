#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gsb/gsb.hpp"

using namespace gsb;

namespace {

  enum Exit { Ok = 0, Negative = 1, Usage = 2, Budget = 3 };

  struct Options {
    std::string file;
    std::size_t max_degree  = 8;
    std::size_t param_bound = 2;
    std::size_t max_pairs   = 2'000'000;
    std::string field;
    std::string order;
    std::string log = "quiet";
    std::string poly;
    std::optional<std::size_t> degree;
    std::size_t cap = 6;
  };

  std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // --field and --order are appended as extra lines, so they override the
  // file and line numbers of the file stay valid.
  Presentation load(Options const& o) {
    std::string text = read_file(o.file);
    if (!o.field.empty()) {
      std::string f = o.field;
      if (f == "q" || f == "Q") {
        f = "Q";
      }
      text += "\nfield " + f + "\n";
    }
    if (!o.order.empty()) {
      text += "\norder " + o.order + "\n";
    }
    Presentation p = parse_presentation(text);
    for (auto line : p.zero_relation_lines) {
      std::cerr << "note: relation on line " << line << " is zero in the "
                << universe_name(p.universe) << " universe and was dropped\n";
    }
    return p;
  }

  CompletionConfig config(Options const& o) {
    CompletionConfig cfg;
    cfg.max_degree  = o.max_degree;
    cfg.param_bound = o.param_bound;
    cfg.max_pairs   = o.max_pairs;
    if (o.log == "pairs") {
      cfg.log = [](std::string const& line) { std::cout << line << "\n"; };
    }
    return cfg;
  }

  template <typename F>
  int dispatch(Presentation const& p, F&& f) {
    switch (p.universe) {
      case Universe::Free: return f(Word{});
      case Universe::Commutative: return f(CommMonomial{});
      case Universe::Tensor: return f(NormalWord{});
      case Universe::Mixed: return f(MixedMonomial{});
    }
    return Usage;
  }

  void print_header(Presentation const& p) {
    std::cout << "universe=" << universe_name(p.universe) << "\n"
              << "order=" << p.order_name() << "\n"
              << "field=" << (p.field.is_rational() ? std::string("Q")
                                                    : "F<" + std::to_string(p.field.characteristic()) + ">")
              << "\n";
  }

  template <typename M>
  void print_basis(BasisState<M> const& st) {
    std::cout << "basis:\n";
    for (std::size_t i = 0; i < st.basis.size(); ++i) {
      std::cout << "s_" << i << " = " << st.basis[i].to_string(st.sig) << "\n";
    }
  }

  // Runs completion; on budget overrun prints the partial state and
  // returns nullopt.
  template <typename M>
  std::optional<BasisState<M>> run_complete(Presentation const& p,
                                            CompletionConfig    cfg,
                                            bool                verify_only) {
    try {
      if (verify_only) {
        return check(p.relations<M>(), p.field, p.order<M>(), p.sig, std::move(cfg));
      }
      return complete(p.relations<M>(), p.field, p.order<M>(), p.sig, std::move(cfg));
    } catch (BudgetExceeded<M> const& e) {
      std::cout << e.state.summary();
      std::cout << "error: " << e.what() << "\n";
      return std::nullopt;
    }
  }

  int cmd_complete(Options const& o, bool verify_only) {
    Presentation const p = load(o);
    print_header(p);
    return dispatch(p, [&](auto tag) {
      using M = decltype(tag);
      auto st = run_complete<M>(p, config(o), verify_only);
      if (!st) {
        return int(Budget);
      }
      std::cout << st->summary();
      if (verify_only) {
        for (auto const& f : st->failures) {
          std::cout << "failure: " << f << "\n";
        }
        if (!st->failures.empty()) {
          std::cout << "not a GSB: " << st->failures.size()
                    << " non-trivial compositions up to degree " << o.max_degree << "\n";
          return int(Negative);
        }
        std::cout << "GSB verified up to degree " << o.max_degree << "\n";
        return int(Ok);
      }
      print_basis(*st);
      return int(Ok);
    });
  }

  int cmd_reduce(Options const& o) {
    Presentation const p = load(o);
    return dispatch(p, [&](auto tag) {
      using M   = decltype(tag);
      auto f    = parse_polynomial<M>(p, o.poly);
      auto tr   = reduce(f, p.relations<M>());
      std::cout << "steps=" << tr.steps.size() << "\n"
                << "remainder=" << tr.remainder.to_string(p.sig) << "\n";
      return int(Ok);
    });
  }

  int cmd_irr(Options const& o) {
    Presentation const p = load(o);
    std::size_t const  d = *o.degree;
    CompletionConfig   cfg = config(o);
    cfg.max_degree         = std::max(cfg.max_degree, d);
    return dispatch(p, [&](auto tag) {
      using M = decltype(tag);
      auto st = run_complete<M>(p, cfg, false);
      if (!st) {
        return int(Budget);
      }
      auto const mons = irr(*st, d);
      std::cout << "status=" << st->status_string() << "\n"
                << "degree=" << d << "\n"
                << "count=" << mons.size() << "\n";
      for (auto const& m : mons) {
        std::cout << to_string(m, p.sig) << "\n";
      }
      return int(Ok);
    });
  }

  int cmd_wordproblem(Options const& o) {
    Presentation const p = load(o);
    return dispatch(p, [&](auto tag) {
      using M = decltype(tag);
      auto f  = parse_polynomial<M>(p, o.poly);
      auto st = run_complete<M>(p, config(o), false);
      if (!st) {
        return int(Budget);
      }
      std::cout << "status=" << st->status_string() << "\n";
      bool const in = word_problem(f, *st);
      std::cout << (in ? "member" : "not a member") << "\n"
                << "normal_form=" << reduce(f, st->basis).remainder.to_string(p.sig) << "\n";
      return in ? int(Ok) : int(Negative);
    });
  }

  int cmd_lift(Options const& o, bool tensor) {
    Presentation const p = load(o);
    LiftConfig         cfg;
    cfg.cap    = o.cap;
    cfg.verify = config(o);
    cfg.verify.log = nullptr;
    Presentation out;
    out.field = p.field;
    out.sig   = p.sig;
    std::vector<std::string> warnings;
    if (!tensor) {
      if (p.universe != Universe::Commutative) {
        throw UniverseMismatch("lift eps needs a commutative presentation");
      }
      auto r           = eps_lift(p.comm_rels, p.field, p.comm_order, p.sig, cfg);
      out.universe     = Universe::Free;
      out.free_order   = FreeOrder::eps(p.comm_order);
      out.free_rels    = std::move(r.relations);
      warnings         = std::move(r.warnings);
    } else {
      if (p.universe != Universe::Mixed) {
        throw UniverseMismatch("lift tensor needs a mixed presentation");
      }
      auto r             = tensor_lift(p.mixed_rels, p.field, p.mixed_order, p.sig, cfg);
      out.universe       = Universe::Tensor;
      out.tensor_order   = TensorOrder::lifted(p.mixed_order.x_order(), p.mixed_order.y_order());
      out.tensor_rels    = std::move(r.relations);
      warnings           = std::move(r.warnings);
    }
    std::cout << "# lifted relations of degree <= " << o.cap << "\n";
    for (auto const& w : warnings) {
      std::cout << "# " << w << "\n";
    }
    std::cout << render_presentation(out);
    return Ok;
  }

  int cmd_oracle_member(Options const& o) {
    Presentation const p = load(o);
    return dispatch(p, [&](auto tag) {
      using M = decltype(tag);
      auto f  = parse_polynomial<M>(p, o.poly);
      std::size_t d = o.degree.value_or(0);
      for (auto const& t : f.terms()) {
        d = std::max(d, degree(t.mono));
      }
      bool const in = member(f, p.relations<M>(), p.sig, d);
      std::cout << "degree=" << d << "\n" << (in ? "member" : "not a member") << "\n";
      return in ? int(Ok) : int(Negative);
    });
  }

  int cmd_oracle_dims(Options const& o) {
    Presentation const p = load(o);
    return dispatch(p, [&](auto tag) {
      using M   = decltype(tag);
      auto dims = quotient_dim(p.relations<M>(), p.sig, p.field, p.order<M>(), *o.degree);
      for (std::size_t k = 0; k < dims.size(); ++k) {
        std::cout << "d=" << k << " dim=" << dims[k].get_str() << "\n";
      }
      return int(Ok);
    });
  }

  void common(CLI::App* app, Options& o) {
    app->add_option("file", o.file, "presentation file")->required()->check(CLI::ExistingFile);
    app->add_option("--max-degree", o.max_degree, "degree bound D")->capture_default_str();
    app->add_option("--param-bound", o.param_bound, "parameter length bound P")->capture_default_str();
    app->add_option("--max-pairs", o.max_pairs, "composition budget")->capture_default_str();
    app->add_option("--field", o.field, "q or p=<prime>, overrides the file");
    app->add_option("--order", o.order, "order spec, overrides the file");
    app->add_option("--log", o.log, "pairs or quiet")
        ->check(CLI::IsMember({"pairs", "quiet"}))
        ->capture_default_str();
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner-Shirshov bases in free, commutative, tensor and mixed algebras"};
  app.require_subcommand(1);
  Options o;

  auto* c_complete = app.add_subcommand("complete", "complete the relations to a basis");
  auto* c_check    = app.add_subcommand("check", "verify the relations are closed under compositions");
  auto* c_reduce   = app.add_subcommand("reduce", "reduce a polynomial by the relations");
  auto* c_irr      = app.add_subcommand("irr", "irreducible monomials of a degree");
  auto* c_word     = app.add_subcommand("wordproblem", "decide membership in the ideal");
  auto* c_lift     = app.add_subcommand("lift", "lift a commutative or mixed basis");
  auto* c_oracle   = app.add_subcommand("oracle", "linear algebra cross-checks");
  for (auto* s : {c_complete, c_check, c_reduce, c_irr, c_word}) {
    common(s, o);
  }
  c_reduce->add_option("--poly", o.poly, "polynomial")->required();
  c_word->add_option("--poly", o.poly, "polynomial")->required();
  c_irr->add_option("--degree", o.degree, "degree")->required();

  c_lift->require_subcommand(1);
  auto* l_eps    = c_lift->add_subcommand("eps", "commutative basis to the free algebra");
  auto* l_tensor = c_lift->add_subcommand("tensor", "mixed basis to the tensor product");
  for (auto* s : {l_eps, l_tensor}) {
    common(s, o);
    s->add_option("--cap", o.cap, "largest degree of a lifted relation")->capture_default_str();
  }

  c_oracle->require_subcommand(1);
  auto* o_member = c_oracle->add_subcommand("member", "membership by linear algebra");
  auto* o_dims   = c_oracle->add_subcommand("dims", "quotient dimensions per degree");
  for (auto* s : {o_member, o_dims}) {
    common(s, o);
  }
  o_member->add_option("--poly", o.poly, "polynomial")->required();
  o_member->add_option("--degree", o.degree, "degree of the slice");
  o_dims->add_option("--degree", o.degree, "largest degree")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (!o.field.empty() && o.field.rfind("p=", 0) != 0 && o.field != "q" && o.field != "Q") {
      std::cerr << "error: --field takes q or p=<prime>\n";
      return Usage;
    }
    if (*c_complete) return cmd_complete(o, false);
    if (*c_check) return cmd_complete(o, true);
    if (*c_reduce) return cmd_reduce(o);
    if (*c_irr) return cmd_irr(o);
    if (*c_word) return cmd_wordproblem(o);
    if (*l_eps) return cmd_lift(o, false);
    if (*l_tensor) return cmd_lift(o, true);
    if (*o_member) return cmd_oracle_member(o);
    if (*o_dims) return cmd_oracle_dims(o);
  } catch (ParseError const& e) {
    std::cerr << "error: " << o.file << ":" << e.what() << "\n";
    return Usage;
  } catch (NotMinimal const& e) {
    std::cerr << "error: not minimal: " << e.what() << "\n";
    return Negative;
  } catch (NotGroebner const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Negative;
  } catch (DegreeOutOfBound const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}
