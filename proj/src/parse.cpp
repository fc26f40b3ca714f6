#include "feec/parse.hpp"

#include <cctype>
#include <utility>
#include <optional>

namespace feec {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Wedge, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  const Token& peek2() {
    if (!next_) next_ = scan();
    return *next_;
  }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    if (next_) {
      current_ = *next_;
      next_.reset();
    } else {
      current_ = scan();
    }
  }

  Token scan() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= text_.size()) return {Tok::End, "", start};
    char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
      return {Tok::Int, text_.substr(start, i_ - start), start};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[i_]))) {
        ++i_;
      }
      return {Tok::Ident, text_.substr(start, i_ - start), start};
    }
    ++i_;
    switch (c) {
      case '+': return {Tok::Plus, "+", start};
      case '-': return {Tok::Minus, "-", start};
      case '*': return {Tok::Star, "*", start};
      case '^': return {Tok::Caret, "^", start};
      case '(': return {Tok::LParen, "(", start};
      case ')': return {Tok::RParen, ")", start};
      case '/':
        if (i_ < text_.size() && text_[i_] == '\\') {
          ++i_;
          return {Tok::Wedge, "/\\", start};
        }
        return {Tok::Slash, "/", start};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token current_;
  std::optional<Token> next_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  FormExpr parse() {
    FormExpr e = parseForm();
    if (lex_.peek().kind != Tok::End) {
      throw ParseError("trailing input after expression", lex_.peek().pos);
    }
    return e;
  }

 private:
  FormExpr parseForm() {
    FormExpr sum;
    sum.kind = FormExpr::Kind::Sum;
    sum.pos = lex_.peek().pos;
    int sign = 1;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      sign = -1;
    }
    sum.children.push_back(parseTerm());
    sum.signs.push_back(sign);
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      sign = lex_.take().kind == Tok::Plus ? 1 : -1;
      sum.children.push_back(parseTerm());
      sum.signs.push_back(sign);
    }
    if (sum.children.size() == 1 && sum.signs[0] == 1) return sum.children[0];
    return sum;
  }

  FormExpr parseTerm() {
    FormExpr prod;
    prod.kind = FormExpr::Kind::Product;
    prod.pos = lex_.peek().pos;
    prod.children.push_back(parseFactor());
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      prod.children.push_back(parseFactor());
    }
    while (lex_.peek().kind == Tok::Wedge) {
      lex_.take();
      prod.children.push_back(parseCovector());
    }
    if (prod.children.size() == 1) return prod.children[0];
    return prod;
  }

  FormExpr parseFactor() {
    FormExpr base = parseBase();
    // Postfix denominators: `int/nat` forms a rational literal, `/s^m`
    // divides any factor by a power of the coordinate sum.
    while (lex_.peek().kind == Tok::Slash) {
      const Token& den = lex_.peek2();
      if (den.kind == Tok::Int) {
        if (base.kind != FormExpr::Kind::Constant) {
          throw ParseError("'/' with a number only follows an integer", den.pos);
        }
        lex_.take();
        Token d = lex_.take();
        Rational q = rational_from_string(d.text);
        if (q == 0) throw ParseError("zero denominator", d.pos);
        base.value /= q;
        base.value.canonicalize();
      } else if (den.kind == Tok::Ident && den.text == "s") {
        lex_.take();
        lex_.take();
        FormExpr div;
        div.kind = FormExpr::Kind::SDivide;
        div.pos = den.pos;
        div.power = 1;
        if (lex_.peek().kind == Tok::Caret) {
          lex_.take();
          div.power = parseNat();
        }
        div.children.push_back(std::move(base));
        base = std::move(div);
      } else {
        throw ParseError("expected a number or s after '/'", den.pos);
      }
    }
    return base;
  }

  FormExpr parseBase() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Int: {
        Token tok = lex_.take();
        FormExpr e;
        e.kind = FormExpr::Kind::Constant;
        e.pos = tok.pos;
        e.value = rational_from_string(tok.text);
        return e;
      }
      case Tok::LParen: {
        lex_.take();
        FormExpr inner = parseForm();
        if (lex_.peek().kind != Tok::RParen) {
          throw ParseError("expected ')'", lex_.peek().pos);
        }
        lex_.take();
        return inner;
      }
      case Tok::Ident: {
        if (t.text.size() > 1 && t.text[0] == 'd') return parseCovector();
        Token tok = lex_.take();
        FormExpr e;
        e.kind = FormExpr::Kind::Variable;
        e.pos = tok.pos;
        e.name = tok.text;
        if (lex_.peek().kind == Tok::Caret) {
          lex_.take();
          e.power = parseNat();
        }
        return e;
      }
      default:
        throw ParseError("expected a number, variable, covector, or '('", t.pos);
    }
  }

  FormExpr parseCovector() {
    const Token& t = lex_.peek();
    if (t.kind != Tok::Ident || t.text.size() < 2 || t.text[0] != 'd') {
      throw ParseError("expected a covector (ds or d<variable>)", t.pos);
    }
    Token tok = lex_.take();
    FormExpr e;
    e.kind = FormExpr::Kind::Covector;
    e.pos = tok.pos;
    e.name = tok.text.substr(1);
    return e;
  }

  int parseNat() {
    if (lex_.peek().kind != Tok::Int) {
      throw ParseError("expected an exponent", lex_.peek().pos);
    }
    Token tok = lex_.take();
    Rational v = rational_from_string(tok.text);
    if (v > 1000) throw ParseError("exponent too large", tok.pos);
    return static_cast<int>(v.get_num().get_si());
  }

  Lexer lex_;
};

// Name binding shared by both lowerings.  Returns the coordinate index, or
// -1 for the coordinate-sum built-in when allowed.
int resolve_variable(const std::string& name, std::size_t pos, int vars,
                     bool allow_aliases, bool allow_s) {
  if (name == "s") {
    if (!allow_s) {
      throw UnknownVariable("s is not a simplex coordinate", pos);
    }
    return -1;
  }
  static const std::string aliases = "xyzw";
  if (name.size() == 1) {
    auto at = aliases.find(name[0]);
    if (at != std::string::npos) {
      if (!allow_aliases) {
        throw UnknownVariable("alias " + name + " requires n <= 3", pos);
      }
      if (static_cast<int>(at) >= vars) {
        throw UnknownVariable("variable " + name + " out of range", pos);
      }
      return static_cast<int>(at);
    }
  }
  if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '9') {
    int idx = name[1] - '1';
    if (idx >= vars) {
      throw UnknownVariable("variable " + name + " out of range", pos);
    }
    return idx;
  }
  throw UnknownVariable("unknown variable " + name, pos);
}

// Both form types are built through one evaluator; ops describes the target.
template <class FormT, class Ops>
FormT lower(const FormExpr& e, const Ops& ops) {
  switch (e.kind) {
    case FormExpr::Kind::Constant:
      return ops.constant(e.value);
    case FormExpr::Kind::Variable: {
      int idx = resolve_variable(e.name, e.pos, ops.vars, ops.allow_aliases,
                                 ops.allow_s);
      return ops.variable_power(idx, e.power);
    }
    case FormExpr::Kind::Covector: {
      int idx = resolve_variable(e.name, e.pos, ops.vars, ops.allow_aliases,
                                 ops.allow_s);
      return ops.covector(idx);
    }
    case FormExpr::Kind::Negate:
      return -lower<FormT>(e.children[0], ops);
    case FormExpr::Kind::Sum: {
      FormT acc = lower<FormT>(e.children[0], ops);
      if (e.signs[0] < 0) acc = -acc;
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        FormT next = lower<FormT>(e.children[i], ops);
        if (e.signs[i] < 0) next = -next;
        if (next.is_zero()) continue;
        if (acc.is_zero()) {
          acc = std::move(next);
          continue;
        }
        if (acc.degree() != next.degree()) {
          throw ParseError("cannot add forms of different degree",
                           e.children[i].pos);
        }
        acc += next;
      }
      return acc;
    }
    case FormExpr::Kind::Product: {
      FormT acc = lower<FormT>(e.children[0], ops);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        acc = wedge(acc, lower<FormT>(e.children[i], ops));
      }
      return acc;
    }
    case FormExpr::Kind::SDivide:
      return ops.s_divide(lower<FormT>(e.children[0], ops), e.power, e.pos);
  }
  throw ParseError("malformed expression tree", e.pos);
}

struct AmbientOps {
  int vars;
  bool allow_aliases;
  bool allow_s = true;

  DiffForm constant(const Rational& c) const {
    DiffForm f(vars, 0);
    if (c != 0) f.add_term({}, SLocalPoly(Polynomial::constant(vars, c)));
    return f;
  }
  DiffForm variable_power(int idx, int e) const {
    Polynomial p = idx < 0 ? coordinate_sum(vars) : Polynomial::variable(vars, idx);
    DiffForm f(vars, 0);
    f.add_term({}, SLocalPoly(power(p, e)));
    return f;
  }
  DiffForm covector(int idx) const {
    DiffForm f(vars, 1);
    if (idx < 0) {
      for (int i = 0; i < vars; ++i) {
        f.add_term({i}, SLocalPoly(Polynomial::constant(vars, Rational(1))));
      }
    } else {
      f.add_term({idx}, SLocalPoly(Polynomial::constant(vars, Rational(1))));
    }
    return f;
  }
  DiffForm s_divide(const DiffForm& f, int m, std::size_t) const {
    return f.s_shifted(m);
  }
};

struct SimplexOps {
  int vars;
  bool allow_aliases;
  bool allow_s = false;

  SimplexForm constant(const Rational& c) const {
    SimplexForm f(vars, 0);
    if (c != 0) f.add_term({}, Polynomial::constant(vars, c));
    return f;
  }
  SimplexForm variable_power(int idx, int e) const {
    SimplexForm f(vars, 0);
    f.add_term({}, power(Polynomial::variable(vars, idx), e));
    return f;
  }
  SimplexForm covector(int idx) const {
    SimplexForm f(vars, 1);
    f.add_term({idx}, Polynomial::constant(vars, Rational(1)));
    return f;
  }
  SimplexForm s_divide(const SimplexForm&, int, std::size_t pos) const {
    throw UnknownVariable("s division is not defined on the simplex", pos);
  }
};

}  // namespace

FormExpr parse_form_expr(const std::string& text) {
  return Parser(text).parse();
}

DiffForm lower_to_diff_form(const FormExpr& expr, int n) {
  if (n < 1) throw DomainError("lower_to_diff_form: n must be at least 1");
  AmbientOps ops{n + 1, n <= 3};
  return lower<DiffForm>(expr, ops);
}

SimplexForm lower_to_simplex_form(const FormExpr& expr, int n) {
  if (n < 1) throw DomainError("lower_to_simplex_form: n must be at least 1");
  SimplexOps ops{n, n <= 3};
  return lower<SimplexForm>(expr, ops);
}

DiffForm parse_diff_form(const std::string& text, int n) {
  return lower_to_diff_form(parse_form_expr(text), n);
}

SimplexForm parse_simplex_form(const std::string& text, int n) {
  return lower_to_simplex_form(parse_form_expr(text), n);
}

}  // namespace feec
