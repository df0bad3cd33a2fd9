#include "instanton/bundle.hpp"

#include "instanton/errors.hpp"

namespace instanton {

long canonicalCoefficientCount(long j) {
  if (j <= 0) return 0;
  return (j - 1) * (2 * j - 1);
}

std::vector<BiMonomial> canonicalSlots(long j) {
  std::vector<BiMonomial> slots;
  for (long i = 1; i <= 2 * j - 2; ++i) {
    for (long l = i - j + 1; l <= j - 1; ++l) slots.push_back({l, i});
  }
  return slots;
}

bool inCanonicalRange(long j, long zExp, long uExp) {
  return uExp >= 1 && zExp >= uExp - j + 1 && zExp <= j - 1;
}

void validateExtensionPoly(const LaurentPoly& p) {
  for (const auto& [m, c] : p.terms()) {
    if (m.uExp < 0) {
      throw Error(ErrorKind::NegativeUExponent,
                  "extension polynomial has a term with negative u-exponent");
    }
    if (m.uExp == 0) {
      throw Error(ErrorKind::NonzeroDivisorRestriction,
                  "extension polynomial has a nonzero u^0 part; the restriction "
                  "to the exceptional divisor would not split as O(j)+O(-j)");
    }
  }
}

TransitionData canonicalize(long j, const LaurentPoly& p) {
  validateExtensionPoly(p);
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    // Terms with zExp >= j are z^j * (chart-one-holomorphic) and terms with
    // zExp <= uExp - j are z^-j * (chart-two-holomorphic); both are absorbed
    // by a change of trivialization, so deleting them keeps the bundle.
    if (inCanonicalRange(j, m.zExp, m.uExp)) out.addTerm(m.zExp, m.uExp, c);
  }
  return {j, out};
}

bool isCanonical(const TransitionData& d) {
  for (const auto& [m, c] : d.p.terms()) {
    if (!inCanonicalRange(d.j, m.zExp, m.uExp)) return false;
  }
  return true;
}

CanonicalCoefficients CanonicalCoefficients::fromData(const TransitionData& d) {
  if (!isCanonical(d)) {
    throw Error(ErrorKind::BadConfig, "coefficient vector needs canonical data");
  }
  CanonicalCoefficients out;
  out.j = d.j;
  for (const auto& slot : canonicalSlots(d.j)) {
    out.coeffs.push_back(d.p.coeff(slot.zExp, slot.uExp));
  }
  return out;
}

TransitionData CanonicalCoefficients::toData() const {
  auto slots = canonicalSlots(j);
  if (coeffs.size() != slots.size()) {
    throw Error(ErrorKind::BadConfig, "coefficient vector has the wrong length");
  }
  LaurentPoly p;
  for (size_t k = 0; k < slots.size(); ++k) {
    p.addTerm(slots[k].zExp, slots[k].uExp, coeffs[k]);
  }
  return {j, p};
}

TransitionData embed(const TransitionData& d) {
  return {d.j + 1, LaurentPoly::monomial(1, 2) * d.p};
}

bool splitsOnNeighborhood(const TransitionData& d, long n) {
  for (const auto& [m, c] : d.p.terms()) {
    if (m.uExp <= n) return false;
  }
  return true;
}

std::optional<long> splittingDepth(const TransitionData& d) {
  if (d.p.isZero()) return std::nullopt;
  return d.p.minUDeg() - 1;
}

TransitionData fromCurve(const LaurentPoly& f, long j) {
  if (f.hasNegativeExponent()) {
    throw Error(ErrorKind::NegativeExponentInput, "curve polynomial has negative exponents");
  }
  if (!f.constantTerm().isZero()) {
    throw Error(ErrorKind::CurveMissesOrigin, "curve does not pass through the origin");
  }
  return canonicalize(j, substituteBlowup(f));
}

}  // namespace instanton
