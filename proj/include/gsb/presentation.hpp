#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsb/error.hpp"
#include "gsb/monoid.hpp"
#include "gsb/order.hpp"
#include "gsb/polynomial.hpp"
#include "gsb/scalar.hpp"

namespace gsb {

  enum class Universe { Free, Commutative, Tensor, Mixed };

  inline char const* universe_name(Universe u) {
    switch (u) {
      case Universe::Free: return "free";
      case Universe::Commutative: return "commutative";
      case Universe::Tensor: return "tensor";
      case Universe::Mixed: return "mixed";
    }
    return "";
  }

  // A parsed presentation file. For the free universe a declared Y alphabet
  // is appended to X (all X letters below all Y letters), so sig.y is empty.
  struct Presentation {
    Field       field;
    Universe    universe = Universe::Tensor;
    Signature   sig;
    FreeOrder   free_order;
    CommOrder   comm_order;
    TensorOrder tensor_order;
    MixedOrder  mixed_order;

    std::vector<Polynomial<Word>>          free_rels;
    std::vector<Polynomial<CommMonomial>>  comm_rels;
    std::vector<Polynomial<NormalWord>>    tensor_rels;
    std::vector<Polynomial<MixedMonomial>> mixed_rels;

    // Source lines of relations that are identically zero in the universe
    // (for instance y1*x1 - x1*y1 in the tensor product); they are dropped.
    std::vector<std::size_t> zero_relation_lines;

    template <typename M>
    std::vector<Polynomial<M>>& relations() {
      if constexpr (std::is_same_v<M, Word>) {
        return free_rels;
      } else if constexpr (std::is_same_v<M, CommMonomial>) {
        return comm_rels;
      } else if constexpr (std::is_same_v<M, NormalWord>) {
        return tensor_rels;
      } else {
        return mixed_rels;
      }
    }

    template <typename M>
    std::vector<Polynomial<M>> const& relations() const {
      return const_cast<Presentation*>(this)->relations<M>();
    }

    template <typename M>
    order_t<M> const& order() const {
      if constexpr (std::is_same_v<M, Word>) {
        return free_order;
      } else if constexpr (std::is_same_v<M, CommMonomial>) {
        return comm_order;
      } else if constexpr (std::is_same_v<M, NormalWord>) {
        return tensor_order;
      } else {
        return mixed_order;
      }
    }

    std::string order_name() const {
      switch (universe) {
        case Universe::Free: return free_order.name();
        case Universe::Commutative: return comm_order.name();
        case Universe::Tensor: return tensor_order.name();
        case Universe::Mixed: return mixed_order.name();
      }
      return "";
    }

    std::size_t relation_count() const {
      return free_rels.size() + comm_rels.size() + tensor_rels.size()
             + mixed_rels.size();
    }

    bool operator==(Presentation const& o) const {
      return field == o.field && universe == o.universe && sig == o.sig
             && order_name() == o.order_name() && free_rels == o.free_rels
             && comm_rels == o.comm_rels && tensor_rels == o.tensor_rels
             && mixed_rels == o.mixed_rels;
    }
  };

  namespace detail {

    inline std::string trim(std::string_view s) {
      std::size_t b = 0, e = s.size();
      while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
      }
      while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
      }
      return std::string(s.substr(b, e - b));
    }

    inline std::string strip_spaces(std::string_view s) {
      std::string out;
      for (char ch : s) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
          out += ch;
        }
      }
      return out;
    }

    // Which side a generator belongs to, and its index.
    struct Generator {
      Side   side;
      Letter letter;
    };

    struct RawTerm {
      Scalar                 coeff;
      std::vector<Generator> factors;  // in order of appearance, powers expanded
    };

    class PolyParser {
     public:
      PolyParser(std::string_view text,
                 std::size_t      line,
                 std::size_t      column0,
                 Field            field,
                 Signature const& sig)
          : s_(text), line_(line), col0_(column0), field_(field), sig_(sig) {}

      // A sum of terms, optionally "lhs = rhs".
      std::vector<RawTerm> parse_relation() {
        auto lhs = parse_sum();
        skip_ws();
        if (peek() == '=') {
          ++pos_;
          auto rhs = parse_sum();
          for (auto& t : rhs) {
            t.coeff = -t.coeff;
            lhs.push_back(std::move(t));
          }
        }
        skip_ws();
        if (pos_ != s_.size()) {
          fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return lhs;
      }

      std::vector<RawTerm> parse_polynomial() {
        auto out = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) {
          fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return out;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw SyntaxError(what, line_, col0_ + pos_ + 1);
      }

      char peek() const {
        return pos_ < s_.size() ? s_[pos_] : '\0';
      }

      void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
      }

      std::vector<RawTerm> parse_sum() {
        std::vector<RawTerm> out;
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
          neg = peek() == '-';
          ++pos_;
        }
        out.push_back(parse_term(neg));
        while (true) {
          skip_ws();
          if (peek() != '+' && peek() != '-') {
            break;
          }
          neg = peek() == '-';
          ++pos_;
          out.push_back(parse_term(neg));
        }
        return out;
      }

      RawTerm parse_term(bool neg) {
        RawTerm t{Scalar::one(field_), {}};
        bool    first = true;
        while (true) {
          skip_ws();
          if (!first) {
            if (peek() != '*' && peek() != ';') {
              break;
            }
            ++pos_;
            skip_ws();
          }
          first = false;
          char const ch = peek();
          if (std::isdigit(static_cast<unsigned char>(ch))) {
            t.coeff *= parse_number();
          } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t const start = pos_;
            std::string       name  = parse_name();
            Generator         g     = lookup(name, start);
            std::size_t       power = 1;
            skip_ws();
            if (peek() == '^') {
              ++pos_;
              skip_ws();
              power = parse_uint();
            }
            for (std::size_t k = 0; k < power; ++k) {
              t.factors.push_back(g);
            }
          } else {
            fail(ch == '\0' ? "unexpected end of relation"
                            : "unexpected '" + std::string(1, ch) + "'");
          }
        }
        if (neg) {
          t.coeff = -t.coeff;
        }
        return t;
      }

      std::size_t parse_uint() {
        std::size_t const start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          ++pos_;
        }
        if (start == pos_) {
          fail("expected a number");
        }
        return std::stoul(std::string(s_.substr(start, pos_ - start)));
      }

      Scalar parse_number() {
        std::size_t const start = pos_;
        parse_uint();
        if (peek() == '/') {
          ++pos_;
          parse_uint();
        }
        std::string const text(s_.substr(start, pos_ - start));
        try {
          return Scalar::parse(field_, text);
        } catch (DivisionByZero const&) {
          pos_ = start;
          fail("coefficient " + text + " has a zero denominator in "
               + field_.to_string());
        }
      }

      std::string parse_name() {
        std::size_t const start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
          ++pos_;
        }
        return std::string(s_.substr(start, pos_ - start));
      }

      Generator lookup(std::string const& name, std::size_t start) const {
        if (auto l = sig_.x.find(name)) {
          return {Side::X, *l};
        }
        if (auto l = sig_.y.find(name)) {
          return {Side::Y, *l};
        }
        throw UnknownGenerator("unknown generator '" + name + "'",
                               line_,
                               col0_ + start + 1);
      }

      std::string_view s_;
      std::size_t      pos_ = 0;
      std::size_t      line_;
      std::size_t      col0_;
      Field            field_;
      Signature const& sig_;
    };

    inline Word x_word(RawTerm const& t, Side side) {
      Word w;
      for (auto const& g : t.factors) {
        if (g.side == side) {
          w.push_back(g.letter);
        }
      }
      return w;
    }

    inline Word monomial_of(RawTerm const& t, Word const*) {
      return x_word(t, Side::X);
    }
    inline CommMonomial monomial_of(RawTerm const& t, CommMonomial const*) {
      return gamma(x_word(t, Side::X));
    }
    inline NormalWord monomial_of(RawTerm const& t, NormalWord const*) {
      return NormalWord{x_word(t, Side::X), x_word(t, Side::Y)};
    }
    inline MixedMonomial monomial_of(RawTerm const& t, MixedMonomial const*) {
      return MixedMonomial{gamma(x_word(t, Side::X)), x_word(t, Side::Y)};
    }

    template <typename M>
    Polynomial<M> build(std::vector<RawTerm> const& raw,
                        Field                       field,
                        order_t<M> const&           order) {
      std::vector<Term<M>> terms;
      for (auto const& t : raw) {
        terms.push_back({t.coeff, monomial_of(t, static_cast<M const*>(nullptr))});
      }
      return Polynomial<M>::normalize(field, order, std::move(terms));
    }

    struct OrderParse {
      std::string_view s;
      std::size_t      pos = 0;

      bool eat(std::string_view tok) {
        if (s.substr(pos, tok.size()) == tok) {
          pos += tok.size();
          return true;
        }
        return false;
      }

      std::optional<CommOrder> comm() {
        // longest keyword first
        if (eat("degrevlex")) {
          return CommOrder::degrevlex();
        }
        if (eat("deglex")) {
          return CommOrder::deglex();
        }
        if (eat("lex")) {
          return CommOrder::lex();
        }
        return std::nullopt;
      }

      std::optional<CommOrder> optional_comm_arg(bool& ok) {
        ok = true;
        if (!eat("(")) {
          return CommOrder::deglex();
        }
        auto c = comm();
        ok     = c.has_value() && eat(")");
        return c;
      }

      std::optional<FreeOrder> free() {
        if (eat("eps-lift")) {
          bool ok;
          auto c = optional_comm_arg(ok);
          if (!ok) {
            return std::nullopt;
          }
          return FreeOrder::eps(*c);
        }
        if (eat("deglex")) {
          return FreeOrder::deglex();
        }
        return std::nullopt;
      }

      bool done() const {
        return pos == s.size();
      }
    };

    inline bool parse_order(std::string const& text, Universe u, Presentation& p) {
      OrderParse op{text};
      switch (u) {
        case Universe::Free: {
          auto o = op.free();
          if (!o || !op.done()) {
            return false;
          }
          p.free_order = *o;
          return true;
        }
        case Universe::Commutative: {
          auto o = op.comm();
          if (!o || !op.done()) {
            return false;
          }
          p.comm_order = *o;
          return true;
        }
        case Universe::Tensor: {
          if (op.eat("tensor(")) {
            auto x = op.free();
            if (!x || !op.eat(",")) {
              return false;
            }
            auto y = op.free();
            if (!y || !op.eat(")") || !op.done()) {
              return false;
            }
            p.tensor_order = TensorOrder::product(*x, *y);
            return true;
          }
          if (op.eat("lifted-tensor")) {
            bool ok;
            auto c = op.optional_comm_arg(ok);
            if (!ok || !op.done()) {
              return false;
            }
            p.tensor_order = TensorOrder::lifted(*c);
            return true;
          }
          return false;
        }
        case Universe::Mixed: {
          if (!op.eat("mixed-yfirst")) {
            return false;
          }
          bool ok;
          auto c = op.optional_comm_arg(ok);
          if (!ok || !op.done()) {
            return false;
          }
          p.mixed_order = MixedOrder::yfirst(*c);
          return true;
        }
      }
      return false;
    }

    inline Field parse_field(std::string const& v, std::size_t line, std::size_t col) {
      if (v == "Q" || v == "q") {
        return Field::rationals();
      }
      std::string digits;
      if (v.size() > 3 && (v[0] == 'F' || v[0] == 'f') && v[1] == '<' && v.back() == '>') {
        digits = v.substr(2, v.size() - 3);
      } else if (v.size() > 1 && (v[0] == 'F' || v[0] == 'f')) {
        digits = v.substr(1);
      } else if (v.rfind("p=", 0) == 0) {
        digits = v.substr(2);
      }
      if (digits.empty()
          || digits.find_first_not_of("0123456789") != std::string::npos
          || digits.size() > 18) {
        throw SyntaxError("field must be Q or F<p>", line, col);
      }
      std::uint64_t const p = std::stoull(digits);
      if (!Field::is_prime(p)) {
        throw SyntaxError(digits + " is not a prime", line, col);
      }
      return Field::prime(p);
    }

  }  // namespace detail

  // Parses a polynomial in the universe and order of `p`.
  template <typename M>
  Polynomial<M> parse_polynomial(Presentation const& p, std::string_view text) {
    detail::PolyParser pp(text, 1, 0, p.field, p.sig);
    return detail::build<M>(pp.parse_relation(), p.field, p.order<M>());
  }

  inline Presentation parse_presentation(std::string_view text) {
    Presentation p;
    struct RelLine {
      std::string body;
      std::size_t line, column;
    };
    std::vector<RelLine>       rels;
    std::optional<std::string> order_text;
    std::size_t                order_line = 0, order_col = 0;
    std::optional<Universe>    universe;
    std::vector<std::string>   xs, ys;
    bool                       have_x = false, have_y = false;

    std::istringstream in{std::string(text)};
    std::string        raw;
    std::size_t        lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      if (auto h = raw.find('#'); h != std::string::npos) {
        raw.erase(h);
      }
      std::string const line = detail::trim(raw);
      if (line.empty()) {
        continue;
      }
      std::size_t const indent = raw.find_first_not_of(" \t");
      std::size_t       kw_end = 0;
      while (kw_end < line.size()
             && !std::isspace(static_cast<unsigned char>(line[kw_end]))
             && line[kw_end] != ':') {
        ++kw_end;
      }
      std::string const keyword = line.substr(0, kw_end);
      std::size_t       rest    = kw_end;
      while (rest < line.size()
             && (std::isspace(static_cast<unsigned char>(line[rest]))
                 || (line[rest] == ':' && keyword != "alphabet"))) {
        ++rest;
      }
      std::string const value = line.substr(rest);
      std::size_t const vcol  = indent + rest + 1;

      if (keyword == "rel") {
        rels.push_back({value, lineno, indent + rest});
      } else if (keyword == "field") {
        p.field = detail::parse_field(detail::strip_spaces(value), lineno, vcol);
      } else if (keyword == "universe") {
        if (value == "free") {
          universe = Universe::Free;
        } else if (value == "commutative") {
          universe = Universe::Commutative;
        } else if (value == "tensor") {
          universe = Universe::Tensor;
        } else if (value == "mixed") {
          universe = Universe::Mixed;
        } else {
          throw SyntaxError("unknown universe '" + value + "'", lineno, vcol);
        }
      } else if (keyword == "order") {
        order_text = detail::strip_spaces(value);
        order_line = lineno;
        order_col  = vcol;
      } else if (keyword == "alphabet") {
        auto colon = value.find(':');
        if (colon == std::string::npos) {
          throw SyntaxError("expected 'alphabet X: ...'", lineno, vcol);
        }
        std::string const which = detail::trim(value.substr(0, colon));
        std::vector<std::string> names;
        std::string              list = value.substr(colon + 1);
        std::size_t              start = 0;
        while (true) {
          auto lt = list.find('<', start);
          std::string name = detail::trim(list.substr(start, lt - start));
          if (!name.empty()) {
            bool ok = std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_';
            for (char ch : name) {
              ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
            }
            if (!ok) {
              throw SyntaxError("bad generator name '" + name + "'", lineno, vcol);
            }
            names.push_back(name);
          } else if (lt != std::string::npos || !names.empty()) {
            throw SyntaxError("empty generator name", lineno, vcol);
          }
          if (lt == std::string::npos) {
            break;
          }
          start = lt + 1;
        }
        if (which == "X") {
          xs     = std::move(names);
          have_x = true;
        } else if (which == "Y") {
          ys     = std::move(names);
          have_y = true;
        } else {
          throw SyntaxError("alphabet must be X or Y", lineno, vcol);
        }
      } else {
        throw SyntaxError("unknown keyword '" + keyword + "'", lineno, indent + 1);
      }
    }

    p.universe = universe.value_or(have_y ? Universe::Tensor : Universe::Free);
    if (!have_x && !have_y) {
      throw SyntaxError("no alphabet declared", lineno == 0 ? 1 : lineno, 1);
    }
    try {
      if (p.universe == Universe::Free) {
        std::vector<std::string> all = xs;
        all.insert(all.end(), ys.begin(), ys.end());
        p.sig.x = Alphabet(Side::X, all);
      } else {
        if (p.universe == Universe::Commutative && !ys.empty()) {
          throw SyntaxError("the commutative universe takes only an X alphabet", 1, 1);
        }
        p.sig.x = Alphabet(Side::X, xs);
        p.sig.y = Alphabet(Side::Y, ys);
        for (auto const& n : ys) {
          if (p.sig.x.find(n)) {
            throw Error("duplicate generator '" + n + "'");
          }
        }
      }
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw SyntaxError(e.what(), 1, 1);
    }

    if (order_text) {
      if (!detail::parse_order(*order_text, p.universe, p)) {
        throw OrderSpecMismatch("order '" + *order_text + "' does not apply to the "
                                    + universe_name(p.universe) + " universe",
                                order_line,
                                order_col);
      }
    }

    for (auto const& r : rels) {
      detail::PolyParser pp(r.body, r.line, r.column, p.field, p.sig);
      auto               raw = pp.parse_relation();
      bool               zero = false;
      switch (p.universe) {
        case Universe::Free: {
          auto f = detail::build<Word>(raw, p.field, p.free_order);
          zero   = f.is_zero();
          if (!zero) {
            p.free_rels.push_back(std::move(f));
          }
          break;
        }
        case Universe::Commutative: {
          auto f = detail::build<CommMonomial>(raw, p.field, p.comm_order);
          zero   = f.is_zero();
          if (!zero) {
            p.comm_rels.push_back(std::move(f));
          }
          break;
        }
        case Universe::Tensor: {
          auto f = detail::build<NormalWord>(raw, p.field, p.tensor_order);
          zero   = f.is_zero();
          if (!zero) {
            p.tensor_rels.push_back(std::move(f));
          }
          break;
        }
        case Universe::Mixed: {
          auto f = detail::build<MixedMonomial>(raw, p.field, p.mixed_order);
          zero   = f.is_zero();
          if (!zero) {
            p.mixed_rels.push_back(std::move(f));
          }
          break;
        }
      }
      if (zero) {
        p.zero_relation_lines.push_back(r.line);
      }
    }
    return p;
  }

  namespace detail {
    inline std::string alphabet_line(char const* which, Alphabet const& a) {
      std::string out = std::string("alphabet ") + which + ":";
      for (std::size_t i = 0; i < a.size(); ++i) {
        out += (i == 0 ? " " : " < ") + a.name(static_cast<Letter>(i));
      }
      return out;
    }
  }  // namespace detail

  // Header of a presentation file, without relations.
  inline std::string render_header(Presentation const& p) {
    std::string out;
    out += "field " + (p.field.is_rational()
                           ? std::string("Q")
                           : "F<" + std::to_string(p.field.characteristic()) + ">");
    out += "\n" + detail::alphabet_line("X", p.sig.x) + "\n";
    if (p.universe != Universe::Free && p.universe != Universe::Commutative
        && p.sig.y.size() > 0) {
      out += detail::alphabet_line("Y", p.sig.y) + "\n";
    }
    out += std::string("universe ") + universe_name(p.universe) + "\n";
    out += "order " + p.order_name() + "\n";
    return out;
  }

  template <typename M>
  std::string render_relations(std::vector<Polynomial<M>> const& rels,
                               Signature const&                  sig) {
    std::string out;
    for (auto const& f : rels) {
      out += "rel " + f.to_string(sig) + "\n";
    }
    return out;
  }

  inline std::string render_presentation(Presentation const& p) {
    std::string out = render_header(p);
    switch (p.universe) {
      case Universe::Free: out += render_relations(p.free_rels, p.sig); break;
      case Universe::Commutative: out += render_relations(p.comm_rels, p.sig); break;
      case Universe::Tensor: out += render_relations(p.tensor_rels, p.sig); break;
      case Universe::Mixed: out += render_relations(p.mixed_rels, p.sig); break;
    }
    return out;
  }

}  // namespace gsb
