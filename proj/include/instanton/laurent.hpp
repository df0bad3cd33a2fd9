#pragma once

#include <map>
#include <string>
#include <vector>

#include "instanton/rational.hpp"

namespace instanton {

/// Exponent pair of a bivariate Laurent monomial z^l u^i. Both exponents may
/// be negative. For curve polynomials in (x, y) the same type is reused with
/// zExp = x-exponent and uExp = y-exponent.
struct BiMonomial {
  long zExp = 0;
  long uExp = 0;

  friend bool operator==(const BiMonomial&, const BiMonomial&) = default;
  // Lexicographic by (uExp, zExp); fixes iteration order everywhere.
  friend auto operator<=>(const BiMonomial& a, const BiMonomial& b) {
    if (a.uExp != b.uExp) return a.uExp <=> b.uExp;
    return a.zExp <=> b.zExp;
  }
};

/// Finitely supported map BiMonomial -> Rational with no stored zeros.
class LaurentPoly {
 public:
  using Terms = std::map<BiMonomial, Rational>;

  LaurentPoly() = default;
  static LaurentPoly monomial(long zExp, long uExp, Rational c = Rational(1));
  static LaurentPoly constant(Rational c);

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  long termCount() const { return static_cast<long>(terms_.size()); }
  Rational coeff(long zExp, long uExp) const;

  /// Adds c * z^l u^i, erasing the term if the sum cancels.
  void addTerm(long zExp, long uExp, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(const Rational& c) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Degree ranges; all return 0 for the zero polynomial.
  long minZDeg() const;
  long maxZDeg() const;
  long minUDeg() const;
  long maxUDeg() const;

  bool hasNegativeExponent() const;
  /// Evaluation at the origin; only valid when there are no negative exponents.
  Rational constantTerm() const { return coeff(0, 0); }

  /// Renders with explicit '*' and '^', terms in (uExp, zExp)-lex order.
  std::string str(const std::string& zName, const std::string& uName) const;

 private:
  Terms terms_;
};

/// f(x, y) -> f(u, z*u): every x^a y^b maps to z^b u^(a+b).
/// Throws NegativeExponentInput unless all exponents are nonnegative.
LaurentPoly substituteBlowup(const LaurentPoly& f);

/// Partial derivatives, treating (zExp, uExp) as (x, y) exponents.
LaurentPoly derivativeX(const LaurentPoly& f);
LaurentPoly derivativeY(const LaurentPoly& f);

}  // namespace instanton
