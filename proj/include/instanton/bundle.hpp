#pragma once

#include <optional>
#include <vector>

#include "instanton/laurent.hpp"

namespace instanton {

/// Transition data (j, p) of a rank-2 bundle on the blown-up plane with
/// vanishing first Chern class: upper-triangular transition matrix
/// (z^j, p; 0, z^-j) between the two charts, p the extension polynomial.
struct TransitionData {
  long j = 0;
  LaurentPoly p;

  friend bool operator==(const TransitionData&, const TransitionData&) = default;
};

/// Number of canonical coefficient slots: J = (j-1)(2j-1) for j >= 1, else 0.
long canonicalCoefficientCount(long j);

/// The canonical slots z^l u^i with 1 <= i <= 2j-2, i-j+1 <= l <= j-1,
/// in lexicographic (i, l) order.
std::vector<BiMonomial> canonicalSlots(long j);

/// True iff z^l u^i survives canonicalization for splitting type j.
bool inCanonicalRange(long j, long zExp, long uExp);

/// Checks that p is a legal extension polynomial: every term has uExp >= 1.
/// Throws NegativeUExponent / NonzeroDivisorRestriction otherwise.
void validateExtensionPoly(const LaurentPoly& p);

/// Deletes every removable term (zExp >= j or zExp <= uExp - j); the result
/// defines an isomorphic bundle with all terms in the canonical range.
TransitionData canonicalize(long j, const LaurentPoly& p);

bool isCanonical(const TransitionData& d);

/// Length-J coefficient vector of a canonical p, lexicographic (i, l) order.
struct CanonicalCoefficients {
  long j = 0;
  std::vector<Rational> coeffs;

  static CanonicalCoefficients fromData(const TransitionData& d);
  TransitionData toData() const;

  friend bool operator==(const CanonicalCoefficients&, const CanonicalCoefficients&) = default;
};

/// (j, p) -> (j+1, z*u^2*p); lands in the canonical range for j+1.
TransitionData embed(const TransitionData& d);

/// True iff the bundle restricted to the n-th formal neighborhood of the
/// exceptional divisor splits, i.e. every canonical term has uExp > n.
bool splitsOnNeighborhood(const TransitionData& d, long n);

/// Largest n such that the bundle splits on the n-th neighborhood;
/// nullopt for the split bundle (p = 0, splits on all of them).
std::optional<long> splittingDepth(const TransitionData& d);

/// Curve polynomial f(x, y) with f(0,0) = 0 to transition data:
/// blow-up substitution followed by canonicalization.
TransitionData fromCurve(const LaurentPoly& f, long j);

}  // namespace instanton
