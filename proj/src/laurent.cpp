#include "instanton/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "instanton/errors.hpp"

namespace instanton {

LaurentPoly LaurentPoly::monomial(long zExp, long uExp, Rational c) {
  LaurentPoly p;
  p.addTerm(zExp, uExp, c);
  return p;
}

LaurentPoly LaurentPoly::constant(Rational c) { return monomial(0, 0, c); }

Rational LaurentPoly::coeff(long zExp, long uExp) const {
  auto it = terms_.find({zExp, uExp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::addTerm(long zExp, long uExp, const Rational& c) {
  if (c.isZero()) return;
  BiMonomial key{zExp, uExp};
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m.zExp, m.uExp, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m.zExp, m.uExp, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      out.addTerm(ma.zExp + mb.zExp, ma.uExp + mb.uExp, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out;
  if (c.isZero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

long LaurentPoly::minZDeg() const {
  long r = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m.zExp < r) r = m.zExp;
    first = false;
  }
  return r;
}

long LaurentPoly::maxZDeg() const {
  long r = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m.zExp > r) r = m.zExp;
    first = false;
  }
  return r;
}

long LaurentPoly::minUDeg() const {
  return terms_.empty() ? 0 : terms_.begin()->first.uExp;
}

long LaurentPoly::maxUDeg() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.uExp;
}

bool LaurentPoly::hasNegativeExponent() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return t.first.zExp < 0 || t.first.uExp < 0;
  });
}

std::string LaurentPoly::str(const std::string& zName, const std::string& uName) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    std::vector<std::string> factors;
    if (!(a == Rational(1)) || (m.zExp == 0 && m.uExp == 0)) factors.push_back(a.pretty());
    auto var = [&](const std::string& name, long e) {
      if (e == 0) return;
      if (e == 1) {
        factors.push_back(name);
      } else {
        factors.push_back(name + "^" + std::to_string(e));
      }
    };
    var(zName, m.zExp);
    var(uName, m.uExp);
    for (size_t k = 0; k < factors.size(); ++k) {
      if (k) os << "*";
      os << factors[k];
    }
  }
  return os.str();
}

LaurentPoly substituteBlowup(const LaurentPoly& f) {
  if (f.hasNegativeExponent()) {
    throw Error(ErrorKind::NegativeExponentInput,
                "blow-up substitution needs a polynomial with nonnegative exponents");
  }
  LaurentPoly out;
  for (const auto& [m, c] : f.terms()) {
    // x^a y^b -> z^b u^(a+b)
    out.addTerm(m.uExp, m.zExp + m.uExp, c);
  }
  return out;
}

LaurentPoly derivativeX(const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [m, c] : f.terms()) {
    if (m.zExp != 0) out.addTerm(m.zExp - 1, m.uExp, c * Rational(m.zExp));
  }
  return out;
}

LaurentPoly derivativeY(const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [m, c] : f.terms()) {
    if (m.uExp != 0) out.addTerm(m.zExp, m.uExp - 1, c * Rational(m.uExp));
  }
  return out;
}

}  // namespace instanton
