#pragma once

#include <memory>
#include <string>

#include "instanton/laurent.hpp"

namespace instanton {

enum class VarSet { xy, zu };

/// Expression tree for polynomial input. Grammar:
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | var | '(' expr ')'
/// Implicit multiplication is rejected; exponents are nonnegative integers.
struct PolyExpr {
  enum class Kind { Number, Variable, Add, Sub, Mul, Pow, Neg };

  Kind kind = Kind::Number;
  Rational value;             // Number
  int var = 0;                // Variable: 0 = first of the set, 1 = second
  std::shared_ptr<PolyExpr> lhs, rhs;
  long exponent = 0;          // Pow

  LaurentPoly evaluate() const;
  std::string print(VarSet vars) const;
};

/// Parses source text over {x, y} or {z, u}. Throws SyntaxError with
/// line/column or UnknownVariable.
PolyExpr parsePoly(const std::string& src, VarSet vars);

/// Convenience: parse directly to a polynomial.
LaurentPoly parsePolynomial(const std::string& src, VarSet vars);

}  // namespace instanton
