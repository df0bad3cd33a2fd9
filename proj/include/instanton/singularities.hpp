#pragma once

#include "instanton/bundle.hpp"
#include "instanton/cohomology.hpp"
#include "instanton/laurent.hpp"

namespace instanton {

/// A plane-curve germ at the origin: f(x, y) with nonnegative exponents,
/// f != 0 and f(0,0) = 0. Construction validates.
struct CurveGerm {
  LaurentPoly f;  // zExp = x-exponent, uExp = y-exponent

  explicit CurveGerm(LaurentPoly poly);
};

struct ClassicalInvariants {
  long multiplicity = 0;
  long milnor = 0;
  long tjurina = 0;
  long branches = 0;
  long delta = 0;

  friend bool operator==(const ClassicalInvariants&, const ClassicalInvariants&) = default;
};

/// Minimal total degree of a term of f.
long multiplicity(const CurveGerm& g);

/// Options for the truncated-colength solver. degreeCap = 0 means the
/// default adaptive cap 4*deg(f) + 8.
struct ColengthOptions {
  long degreeCap = 0;
};

/// Local colength of the Jacobian ideal <f_x, f_y> at the origin.
/// Throws NonIsolatedSingularity when the truncation never certifies.
long milnor(const CurveGerm& g, const ColengthOptions& opts = {});

/// Local colength of <f, f_x, f_y> at the origin.
long tjurina(const CurveGerm& g, const ColengthOptions& opts = {});

/// True iff f is square-free (gcd(f, f_x, f_y) is constant).
bool isReduced(const LaurentPoly& f);

/// Number of local analytic branches at the origin, by the Newton-Puiseux
/// recursion over the rationals. Throws NonReducedGerm for a square factor
/// and ExtensionFieldRecursionUnsupported when a repeated root of an
/// irreducible factor of degree >= 2 would force recursion in an extension.
long branchCount(const CurveGerm& g);

/// delta = (milnor + branches - 1) / 2; throws ParityViolation if odd.
long delta(const CurveGerm& g, const ColengthOptions& opts = {});

ClassicalInvariants classicalInvariants(const CurveGerm& g, const ColengthOptions& opts = {});

struct CurveReport {
  ClassicalInvariants classical;
  CertifiedNumbers instanton;
  TransitionData bundle;  // canonical transition data used for the numbers
};

/// One table row: classical invariants plus the instanton numbers of the
/// bundle built from the curve.
CurveReport curveInvariants(const CurveGerm& g, long j, const SolverOptions& sopts = {},
                            const ColengthOptions& copts = {});

}  // namespace instanton
