#pragma once

#include <string>
#include <vector>

#include "feec/errors.hpp"
#include "feec/forms.hpp"

namespace feec {

// A parsed but unresolved expression: variable names are kept as written and
// bound to coordinates only when lowering against a dimension.
struct FormExpr {
  enum class Kind {
    Constant,   // value
    Variable,   // name, power (s counts as a variable here)
    Covector,   // name ("s" for ds, otherwise a variable name)
    Sum,        // children with signs
    Product,    // children, graded wedge
    Negate,     // single child
    SDivide,    // single child divided by s^power
  };

  Kind kind;
  std::size_t pos = 0;  // offset into the source text, for diagnostics
  Rational value;
  std::string name;
  int power = 1;
  std::vector<FormExpr> children;
  std::vector<int> signs;  // Sum only, +1/-1 per child
};

// A variable name that does not exist at the given dimension.
class UnknownVariable : public ParseError {
 public:
  UnknownVariable(const std::string& what, std::size_t position)
      : ParseError(what, position) {}
};

// Syntax-only parse; throws ParseError with a position on malformed input.
FormExpr parse_form_expr(const std::string& text);

// Lowering binds names against n: ambient forms see n+1 coordinates plus the
// built-ins s and ds, simplex forms see n coordinates and neither built-in.
// Aliases x,y,z,w are accepted for n <= 3.
DiffForm lower_to_diff_form(const FormExpr& expr, int n);
SimplexForm lower_to_simplex_form(const FormExpr& expr, int n);

DiffForm parse_diff_form(const std::string& text, int n);
SimplexForm parse_simplex_form(const std::string& text, int n);

}  // namespace feec
