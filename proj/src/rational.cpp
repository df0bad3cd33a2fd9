#include "instanton/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "instanton/errors.hpp"

namespace instanton {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::BadConfig, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw Error(ErrorKind::BadConfig, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::fromString(const std::string& s) {
  if (s.empty()) throw Error(ErrorKind::SyntaxError, "empty rational literal");
  try {
    mpq_class v(s);
    v.canonicalize();
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator");
    return Rational(v);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::SyntaxError, "bad rational literal: '" + s + "'");
  }
}

std::string Rational::exact() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::pretty() const {
  if (isInteger()) return v_.get_num().get_str();
  return exact();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.pretty();
}

}  // namespace instanton
