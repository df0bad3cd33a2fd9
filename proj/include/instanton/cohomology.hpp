#pragma once

#include <functional>
#include <string>

#include "instanton/bundle.hpp"

namespace instanton {

/// Truncation window for the section and cochain spaces. u-exponents range
/// over [iMin, iMax], z-exponents over [lMin, lMax], with iMin <= 0 <= iMax
/// and lMin <= lMax. Constraints and generators are only emitted when their
/// live monomial support lies inside the window.
struct Window {
  long iMin = 0;
  long iMax = 0;
  long lMin = 0;
  long lMax = 0;

  friend bool operator==(const Window&, const Window&) = default;
  std::string str() const;
};

/// Initial window for (j, p): iMin = -j, iMax = max(2j-2, maxUDeg p),
/// lMin = -j + minZDeg p - 1, lMax = iMax + j + maxZDeg p. The split-bundle
/// closed forms already live inside it.
Window defaultWindow(long j, const LaurentPoly& p);

struct SolverOptions {
  long maxDoublings = 3;  // growth steps after the initial window
  long iMaxCap = 0;       // 0 = uncapped; small caps force StabilizationFailure
};

/// A dimension together with the first window of the certifying run.
struct CertifiedDim {
  long value = 0;
  Window window;
};

/// Runs the builder over the growth schedule and returns the first value
/// attained by three consecutive windows. Throws StabilizationFailure when
/// the schedule is exhausted without agreement.
CertifiedDim stabilizedDimension(long j, const LaurentPoly& p,
                                 const std::function<long(const Window&)>& builder,
                                 const SolverOptions& opts = {});

/// Width and height of a single truncation window (no certification).
long widthAt(const TransitionData& d, const Window& w);
long heightAt(const TransitionData& d, const Window& w);

/// Certified solvers. Input may carry removable terms; the computed numbers
/// are invariants of the underlying bundle either way.
CertifiedDim width(const TransitionData& d, const SolverOptions& opts = {});
CertifiedDim height(const TransitionData& d, const SolverOptions& opts = {});

struct InstantonNumbers {
  long width = 0;
  long height = 0;
  long charge = 0;

  friend bool operator==(const InstantonNumbers&, const InstantonNumbers&) = default;
};

struct CertifiedNumbers {
  InstantonNumbers numbers;
  Window widthWindow;
  Window heightWindow;
};

/// Canonicalizes, runs both solvers, validates j <= charge <= j^2 (throws
/// BoundViolation otherwise) and warns on stderr if the stratification caps
/// w <= j(j+1)/2, h <= j(j-1)/2 or floors w >= 1, h >= j-1 are violated.
CertifiedNumbers instantonNumbers(const TransitionData& d, const SolverOptions& opts = {});

}  // namespace instanton
