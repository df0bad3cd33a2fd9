#include "instanton/cohomology.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

#include "instanton/errors.hpp"
#include "instanton/linalg.hpp"

namespace instanton {

// Chart predicates, in (zExp, uExp) = (l, i) coordinates. Chart one has
// coordinates (z, u), chart two (z^-1, zu); the exceptional divisor is u = 0.
//   holomorphic on chart one:            l >= 0 and i >= 0
//   holomorphic on chart two:            l <= i and i >= 0
//   holomorphic off the divisor, chart one:  l >= 0
//   holomorphic off the divisor, chart two:  l <= i
// Every solver below is assembled from these four index sets.

std::string Window::str() const {
  std::ostringstream os;
  os << "[i " << iMin << ".." << iMax << ", l " << lMin << ".." << lMax << "]";
  return os.str();
}

Window defaultWindow(long j, const LaurentPoly& p) {
  Window w;
  w.iMin = -j;
  w.iMax = std::max(2 * j - 2, p.maxUDeg());
  if (w.iMax < 0) w.iMax = 0;
  w.lMin = -j + p.minZDeg() - 1;
  w.lMax = w.iMax + j + p.maxZDeg();
  if (w.lMax < w.lMin) w.lMax = w.lMin;
  return w;
}

namespace {

Window grow(long j, const LaurentPoly& p, const Window& w, long iMaxCap) {
  Window g = w;
  g.iMax = w.iMax <= 0 ? 2 : 2 * w.iMax;
  if (iMaxCap > 0 && g.iMax > iMaxCap) g.iMax = iMaxCap;
  long delta = g.iMax - w.iMax;
  g.lMax = g.iMax + j + p.maxZDeg();
  if (g.lMax < w.lMax) g.lMax = w.lMax;
  g.lMin = w.lMin - delta;
  return g;
}

Window initialWindow(long j, const LaurentPoly& p, long iMaxCap) {
  Window w = defaultWindow(j, p);
  if (iMaxCap > 0 && w.iMax > iMaxCap) {
    w.iMax = iMaxCap;
    w.lMax = w.iMax + j + p.maxZDeg();
    if (w.lMax < w.lMin) w.lMax = w.lMin;
  }
  return w;
}

}  // namespace

CertifiedDim stabilizedDimension(long j, const LaurentPoly& p,
                                 const std::function<long(const Window&)>& builder,
                                 const SolverOptions& opts) {
  std::vector<Window> windows;
  std::vector<long> values;
  Window w = initialWindow(j, p, opts.iMaxCap);
  for (long k = 0; k <= opts.maxDoublings; ++k) {
    windows.push_back(w);
    values.push_back(builder(w));
    size_t n = values.size();
    if (n >= 3 && values[n - 1] == values[n - 2] && values[n - 2] == values[n - 3]) {
      return {values[n - 1], windows[n - 3]};
    }
    Window next = grow(j, p, w, opts.iMaxCap);
    if (next == w) break;  // capped: no further growth possible
    w = next;
  }
  throw Error(ErrorKind::StabilizationFailure,
              "dimension did not stabilize over three consecutive windows "
              "(last window " + w.str() + ")");
}

// ---------------------------------------------------------------------------
// Width: sections of the bundle off the exceptional divisor modulo sections
// that extend across it. A section is a pair (s1, s2) holomorphic off the
// divisor on chart one whose transform (z^j s1 + p s2, z^-j s2) is
// holomorphic off the divisor on chart two. It extends across the divisor
// exactly when its coefficients on monomials with i < 0 all vanish, so the
// quotient dimension is the projection of the solution space onto those
// coordinates.
//
// The assembled system eliminates two structural blocks up front:
//   - the chart-two condition on z^-j s2 confines s2 to the strip l <= i+j,
//     so only strip monomials are kept as unknowns;
//   - a constraint at z^m u^i with m >= j pins the single coefficient
//     s1[m-j, i] and imposes nothing on s2, so s1 drops out entirely. The
//     pinned s1 values on i < 0 are linear functions of the kept strip
//     coordinates and add nothing to the projected dimension.
// What remains are the pure-s2 constraints at i < m < j.

long widthAt(const TransitionData& d, const Window& w) {
  const long j = d.j;
  const LaurentPoly& p = d.p;

  std::map<std::pair<long, long>, long> slot;  // (l, i) -> column
  for (long i = w.iMin; i <= w.iMax; ++i) {
    for (long l = 0; l <= std::min(i + j, w.lMax); ++l) slot[{l, i}] = 0;
  }
  long next = 0;
  for (auto& [k, v] : slot) v = next++;

  std::vector<std::map<long, Rational>> rows;
  for (long i = w.iMin; i <= w.iMax; ++i) {
    for (long m = i + 1; m <= j - 1; ++m) {
      // coefficient of z^m u^i in p * s2
      std::map<long, Rational> row;
      bool emit = true;
      for (const auto& [t, c] : p.terms()) {
        long la = m - t.zExp, ib = i - t.uExp;
        if (la < 0 || la > ib + j) continue;   // no unknown / structurally zero
        if (ib < w.iMin) continue;             // empty strip below the window
        if (la > w.lMax || ib > w.iMax) {      // live unknown outside the window
          emit = false;
          break;
        }
        long cc = slot.at({la, ib});
        auto it = row.find(cc);
        if (it == row.end()) {
          row[cc] = c;
        } else {
          it->second += c;
          if (it->second.isZero()) row.erase(it);
        }
      }
      if (emit && !row.empty()) rows.push_back(std::move(row));
    }
  }

  SparseMatrix mat(static_cast<long>(rows.size()), next);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) mat.set(static_cast<long>(r), c, v);
  }
  std::set<long> keep;
  for (const auto& [k, col] : slot) {
    if (k.second < 0) keep.insert(col);
  }
  return projectedSolutionDim(mat, keep);
}

// ---------------------------------------------------------------------------
// Height: H^1 of the two-chart cover. Cochains are pairs holomorphic on the
// chart overlap (any l, i >= 0); the coboundary image is spanned by pairs
// holomorphic on chart one together with chart-two pairs expressed in the
// chart-one trivialization, i.e. (b1, b2) |-> (z^-j b1 - p b2, z^j b2) over
// chart-two monomials z^m u^i with m <= i. Chart-one generators are exactly
// the unit vectors with l >= 0, so the quotient is computed on the l < 0
// slots with the transformed generators clipped to them. Clipping (rather
// than dropping) out-of-window monomials is what keeps large-window values
// exact; the stabilization certificate referees the truncation.

long heightAt(const TransitionData& d, const Window& w) {
  const long j = d.j;
  const LaurentPoly& p = d.p;

  std::map<std::tuple<int, long, long>, long> slot;  // (component, l, i), l < 0
  for (int comp = 1; comp <= 2; ++comp) {
    for (long l = w.lMin; l <= std::min(w.lMax, -1L); ++l) {
      for (long i = 0; i <= w.iMax; ++i) slot[{comp, l, i}] = 0;
    }
  }
  long next = 0;
  for (auto& [k, v] : slot) v = next++;
  auto col = [&](int comp, long l, long i) { return slot.at({comp, l, i}); };

  std::vector<std::map<long, Rational>> gens;
  long mLo = w.lMin - j + std::min(0L, p.minZDeg()) - 1;
  for (long i = 0; i <= w.iMax; ++i) {
    for (long m = mLo; m <= i; ++m) {
      // (b1, 0) -> (z^(m-j) u^i, 0)
      long l1 = m - j;
      if (l1 >= w.lMin && l1 <= -1) {
        gens.push_back({{col(1, l1, i), Rational(1)}});
      }
      // (0, b2) -> (-p z^m u^i, z^(m+j) u^i), clipped to the window
      std::map<long, Rational> g;
      long l2 = m + j;
      if (l2 >= w.lMin && l2 <= -1) g[col(2, l2, i)] = Rational(1);
      for (const auto& [t, c] : p.terms()) {
        long la = m + t.zExp, ib = i + t.uExp;
        if (la < w.lMin || la > -1 || ib > w.iMax) continue;
        long cc = col(1, la, ib);
        auto it = g.find(cc);
        if (it == g.end()) {
          g[cc] = -c;
        } else {
          it->second -= c;
          if (it->second.isZero()) g.erase(it);
        }
      }
      if (!g.empty()) gens.push_back(std::move(g));
    }
  }

  SparseMatrix mat(static_cast<long>(gens.size()), next);
  for (size_t r = 0; r < gens.size(); ++r) {
    for (const auto& [c, v] : gens[r]) mat.set(static_cast<long>(r), c, v);
  }
  return next - rank(mat);
}

CertifiedDim width(const TransitionData& d, const SolverOptions& opts) {
  validateExtensionPoly(d.p);
  return stabilizedDimension(
      d.j, d.p, [&](const Window& w) { return widthAt(d, w); }, opts);
}

CertifiedDim height(const TransitionData& d, const SolverOptions& opts) {
  validateExtensionPoly(d.p);
  return stabilizedDimension(
      d.j, d.p, [&](const Window& w) { return heightAt(d, w); }, opts);
}

CertifiedNumbers instantonNumbers(const TransitionData& d, const SolverOptions& opts) {
  if (d.j < 0) throw Error(ErrorKind::BadConfig, "splitting type must be nonnegative");
  TransitionData canon = canonicalize(d.j, d.p);
  CertifiedDim w = width(canon, opts);
  CertifiedDim h = height(canon, opts);
  CertifiedNumbers out;
  out.numbers = {w.value, h.value, w.value + h.value};
  out.widthWindow = w.window;
  out.heightWindow = h.window;
  const long j = d.j;
  if (j >= 1 && (out.numbers.charge < j || out.numbers.charge > j * j)) {
    std::ostringstream os;
    os << "charge " << out.numbers.charge << " outside [" << j << ", " << j * j
       << "] for splitting type " << j;
    throw Error(ErrorKind::BoundViolation, os.str());
  }
  if (j >= 1) {
    // Stratification caps; logged rather than fatal.
    if (out.numbers.width < 1 || out.numbers.width > j * (j + 1) / 2 ||
        out.numbers.height < j - 1 || out.numbers.height > j * (j - 1) / 2) {
      std::fprintf(stderr,
                   "warning: (w, h) = (%ld, %ld) outside the expected strata "
                   "ranges for j = %ld\n",
                   out.numbers.width, out.numbers.height, j);
    }
  }
  return out;
}

}  // namespace instanton
