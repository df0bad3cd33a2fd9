#include "instanton/singularities.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "instanton/errors.hpp"

namespace instanton {

CurveGerm::CurveGerm(LaurentPoly poly) : f(std::move(poly)) {
  if (f.isZero()) throw Error(ErrorKind::BadConfig, "curve polynomial is zero");
  if (f.hasNegativeExponent()) {
    throw Error(ErrorKind::NegativeExponentInput, "curve polynomial has negative exponents");
  }
  if (!f.constantTerm().isZero()) {
    throw Error(ErrorKind::CurveMissesOrigin, "curve does not pass through the origin");
  }
}

long multiplicity(const CurveGerm& g) {
  long best = 0;
  bool first = true;
  for (const auto& [m, c] : g.f.terms()) {
    long d = m.zExp + m.uExp;
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Truncated local colength. Work in the monomials of total degree <= N with
// the span of all monomial multiples of the generators of total degree <= N.
// Certificate: there is a degree s <= N-1 whose monomials all lie in that
// span modulo monomials of higher degree (so the ideal contains m^s locally)
// and the resulting dimension agrees for two consecutive N.

namespace {

using Row = std::vector<std::pair<long, Rational>>;  // (col, value), col-sorted

void axpyRow(Row& r, const Rational& f, const Row& pivot) {
  Row out;
  out.reserve(r.size() + pivot.size());
  size_t i = 0, k = 0;
  while (i < r.size() || k < pivot.size()) {
    if (k == pivot.size() || (i < r.size() && r[i].first < pivot[k].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || pivot[k].first < r[i].first) {
      out.emplace_back(pivot[k].first, -(f * pivot[k].second));
      ++k;
    } else {
      Rational v = r[i].second - f * pivot[k].second;
      if (!v.isZero()) out.emplace_back(r[i].first, v);
      ++i;
      ++k;
    }
  }
  r = std::move(out);
}

class MonEchelon {
 public:
  bool insert(Row row) {
    while (!row.empty()) {
      long lead = row.front().first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        Rational inv = Rational(1) / row.front().second;
        for (auto& [c, v] : row) v *= inv;
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      axpyRow(row, row.front().second, it->second);
    }
    return false;
  }
  bool reducesToZero(Row row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) return false;
      axpyRow(row, row.front().second, it->second);
    }
    return true;
  }
  long rank() const { return static_cast<long>(pivots_.size()); }

 private:
  std::map<long, Row> pivots_;
};

long maxTotalDeg(const LaurentPoly& g) {
  long d = 0;
  for (const auto& [m, c] : g.terms()) d = std::max(d, m.zExp + m.uExp);
  return d;
}

// Columns ordered by (x-exponent, y-exponent) lex over all monomials of
// total degree <= N.
long monCol(long a, long b, long N) {
  // for fixed a, b runs 0..N-a; offset = sum_{t<a} (N-t+1)
  return a * (N + 1) - a * (a - 1) / 2 + b;
}

std::optional<long> colengthOnce(const std::vector<LaurentPoly>& gens, long N) {
  MonEchelon ech;
  for (const auto& g : gens) {
    long dg = maxTotalDeg(g);
    for (long a = 0; a + dg <= N; ++a) {
      for (long b = 0; a + b + dg <= N; ++b) {
        std::map<long, Rational> acc;
        for (const auto& [m, c] : g.terms()) acc[monCol(m.zExp + a, m.uExp + b, N)] += c;
        Row row;
        for (const auto& [cc, v] : acc) {
          if (!v.isZero()) row.emplace_back(cc, v);
        }
        ech.insert(std::move(row));
      }
    }
  }
  // Sweep degrees downward, testing containment of degree s before the
  // degree-s monomial rows are added; record the rank including them.
  std::vector<bool> ok(N + 1, false);
  std::vector<long> rankIncl(N + 1, 0);
  for (long s = N; s >= 0; --s) {
    bool all = true;
    for (long a = 0; a <= s && all; ++a) {
      all = ech.reducesToZero({{monCol(a, s - a, N), Rational(1)}});
    }
    ok[s] = all;
    for (long a = 0; a <= s; ++a) {
      ech.insert({{monCol(a, s - a, N), Rational(1)}});
    }
    rankIncl[s] = ech.rank();
  }
  for (long s = 0; s <= N - 1; ++s) {
    if (ok[s]) {
      long dimV = (N + 1) * (N + 2) / 2;
      return dimV - rankIncl[s];
    }
  }
  return std::nullopt;
}

long localColength(const std::vector<LaurentPoly>& gensIn, long cap) {
  std::vector<LaurentPoly> gens;
  for (const auto& g : gensIn) {
    if (!g.isZero()) gens.push_back(g);
  }
  if (gens.empty()) {
    throw Error(ErrorKind::NonIsolatedSingularity, "ideal is zero");
  }
  long n0 = 0;
  for (const auto& g : gens) n0 = std::max(n0, maxTotalDeg(g));
  std::optional<long> prev;
  for (long N = n0 + 2; N <= cap; ++N) {
    std::optional<long> cur = colengthOnce(gens, N);
    if (cur && prev && *cur == *prev) return *cur;
    prev = cur;
  }
  throw Error(ErrorKind::NonIsolatedSingularity,
              "colength did not stabilize up to the degree cap (non-isolated "
              "singularity or cap too small)");
}

long capFor(const CurveGerm& g, const ColengthOptions& opts) {
  if (opts.degreeCap > 0) return opts.degreeCap;
  return 4 * maxTotalDeg(g.f) + 8;
}

}  // namespace

long milnor(const CurveGerm& g, const ColengthOptions& opts) {
  return localColength({derivativeX(g.f), derivativeY(g.f)}, capFor(g, opts));
}

long tjurina(const CurveGerm& g, const ColengthOptions& opts) {
  return localColength({g.f, derivativeX(g.f), derivativeY(g.f)}, capFor(g, opts));
}

// ---------------------------------------------------------------------------
// Reducedness via gcd(f, f_x, f_y) over Q[x][y].

namespace {

using UPoly = std::vector<Rational>;  // dense in x, no trailing zeros

void utrim(UPoly& p) {
  while (!p.empty() && p.back().isZero()) p.pop_back();
}

long udeg(const UPoly& p) { return static_cast<long>(p.size()) - 1; }

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  }
  utrim(out);
  return out;
}

UPoly usub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  utrim(a);
  return a;
}

UPoly uscale(UPoly a, const Rational& c) {
  for (auto& v : a) v *= c;
  utrim(a);
  return a;
}

// a = q*b + r, exact over Q
std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  UPoly q;
  long db = udeg(b);
  if (db < 0) throw Error(ErrorKind::BadConfig, "division by zero polynomial");
  while (udeg(a) >= db) {
    long k = udeg(a) - db;
    Rational c = a.back() / b.back();
    if (static_cast<long>(q.size()) < k + 1) q.resize(k + 1, Rational(0));
    q[k] += c;
    for (size_t i = 0; i < b.size(); ++i) a[i + k] -= c * b[i];
    utrim(a);
  }
  utrim(q);
  return {q, a};
}

UPoly ugcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    auto [q, r] = udivmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational inv = Rational(1) / a.back();
    for (auto& v : a) v *= inv;
  }
  return a;
}

UPoly uderiv(const UPoly& a) {
  UPoly out;
  for (size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * Rational(static_cast<long>(i)));
  utrim(out);
  return out;
}

// Bivariate as dense vector over y-degree with UPoly coefficients in x.
using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

long bdeg(const BPoly& p) { return static_cast<long>(p.size()) - 1; }

BPoly toB(const LaurentPoly& f) {
  BPoly out;
  for (const auto& [m, c] : f.terms()) {
    if (static_cast<long>(out.size()) < m.uExp + 1) out.resize(m.uExp + 1);
    UPoly& row = out[m.uExp];
    if (static_cast<long>(row.size()) < m.zExp + 1) row.resize(m.zExp + 1, Rational(0));
    row[m.zExp] += c;
  }
  for (auto& row : out) utrim(row);
  btrim(out);
  return out;
}

UPoly bcontent(const BPoly& p) {
  UPoly g;
  for (const auto& row : p) {
    if (!row.empty()) g = ugcd(g, row);
  }
  return g;
}

BPoly bprim(const BPoly& p) {
  UPoly c = bcontent(p);
  if (c.empty() || udeg(c) == 0) return p;
  BPoly out;
  for (const auto& row : p) {
    if (row.empty()) {
      out.push_back({});
    } else {
      auto [q, r] = udivmod(row, c);
      out.push_back(q);  // exact by construction
    }
  }
  btrim(out);
  return out;
}

// pseudo-remainder of a by b in y
BPoly bprem(BPoly a, const BPoly& b) {
  long db = bdeg(b);
  const UPoly& lb = b.back();
  while (bdeg(a) >= db && !a.empty()) {
    long k = bdeg(a) - db;
    UPoly la = a.back();
    // a = lb*a - la * y^k * b
    BPoly next(std::max(a.size(), b.size() + k));
    for (size_t i = 0; i < a.size(); ++i) next[i] = umul(lb, a[i]);
    for (size_t i = 0; i < b.size(); ++i) next[i + k] = usub(next[i + k], umul(la, b[i]));
    btrim(next);
    a = std::move(next);
    if (bdeg(a) == db + k) {
      // no cancellation would loop forever; cannot happen by construction
      throw Error(ErrorKind::InternalLimit, "pseudo-division failed to reduce degree");
    }
  }
  return a;
}

BPoly bgcd(BPoly a, BPoly b) {
  btrim(a);
  btrim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  UPoly ca = bcontent(a), cb = bcontent(b);
  UPoly d = ugcd(ca, cb);
  a = bprim(a);
  b = bprim(b);
  while (!b.empty()) {
    if (bdeg(b) == 0) {
      // common primitive part is trivial in y
      a = {UPoly{Rational(1)}};
      break;
    }
    BPoly r = bprem(a, b);
    a = std::move(b);
    b = bprim(r);
  }
  a = bprim(a);
  // multiply back the content gcd
  BPoly out;
  for (const auto& row : a) out.push_back(row.empty() ? UPoly{} : umul(row, d));
  btrim(out);
  return out;
}

bool bIsConstant(const BPoly& p) {
  if (p.empty()) return false;
  return bdeg(p) == 0 && udeg(p[0]) == 0;
}

}  // namespace

bool isReduced(const LaurentPoly& f) {
  BPoly F = toB(f);
  BPoly g = bgcd(bgcd(F, toB(derivativeX(f))), toB(derivativeY(f)));
  return bIsConstant(g);
}

// ---------------------------------------------------------------------------
// Newton-Puiseux branch counting over Q.

namespace {

// square-free decomposition (Yun): returns (factor, multiplicity) pairs
std::vector<std::pair<UPoly, long>> squarefreeParts(const UPoly& u) {
  std::vector<std::pair<UPoly, long>> out;
  UPoly g = ugcd(u, uderiv(u));
  if (g.empty() || udeg(g) == 0) {
    out.emplace_back(u, 1);
    return out;
  }
  auto [w0, r0] = udivmod(u, g);
  auto [y0, r1] = udivmod(uderiv(u), g);
  UPoly w = w0, y = y0;
  long k = 1;
  while (udeg(w) > 0) {
    UPoly z = usub(y, uderiv(w));
    UPoly p = ugcd(w, z);
    if (udeg(p) > 0) out.emplace_back(p, k);
    w = udivmod(w, p).first;
    y = udivmod(z, p).first;
    ++k;
  }
  return out;
}

std::vector<unsigned long> divisorsOf(const mpz_class& nIn) {
  mpz_class n = abs(nIn);
  if (n == 0) return {};
  if (!n.fits_ulong_p() || n.get_ui() > 1000000000000UL) {
    throw Error(ErrorKind::InternalLimit,
                "rational root search: coefficient too large to factor");
  }
  unsigned long v = n.get_ui();
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d != v / d) out.push_back(v / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational ueval(const UPoly& u, const Rational& x) {
  Rational acc(0);
  for (size_t i = u.size(); i-- > 0;) acc = acc * x + u[i];
  return acc;
}

// all rational roots of a squarefree u with u(0) != 0
std::vector<Rational> rationalRoots(const UPoly& u) {
  mpz_class den(1);
  for (const auto& c : u) den = lcm(den, c.denominator());
  std::vector<mpz_class> iu;
  for (const auto& c : u) iu.push_back(c.numerator() * (den / c.denominator()));
  std::vector<Rational> roots;
  auto ps = divisorsOf(iu.front());
  auto qs = divisorsOf(iu.back());
  for (unsigned long pn : ps) {
    for (unsigned long qd : qs) {
      if (std::gcd(pn, qd) != 1) continue;
      for (int sgn = 1; sgn >= -1; sgn -= 2) {
        Rational r(static_cast<long>(pn) * sgn, static_cast<long>(qd));
        if (ueval(u, r).isZero()) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

using Supp = std::map<std::pair<long, long>, Rational>;  // (a, b) -> coeff

Supp toSupp(const LaurentPoly& f) {
  Supp s;
  for (const auto& [m, c] : f.terms()) s[{m.zExp, m.uExp}] = c;
  return s;
}

mpz_class binom(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

long branchesRec(Supp f, int depth) {
  if (depth > 64) {
    throw Error(ErrorKind::InternalLimit, "branch recursion too deep");
  }
  long count = 0;
  // pure x / y factor extraction; a square factor means a non-reduced germ
  long ax = f.begin()->first.first;
  for (const auto& [k, c] : f) ax = std::min(ax, k.first);
  if (ax >= 2) throw Error(ErrorKind::NonReducedGerm, "x^2 divides the germ");
  if (ax == 1) {
    ++count;  // the branch x = 0
    Supp g;
    for (const auto& [k, c] : f) g[{k.first - 1, k.second}] = c;
    f = std::move(g);
  }
  long ay = f.begin()->first.second;
  for (const auto& [k, c] : f) ay = std::min(ay, k.second);
  if (ay >= 2) throw Error(ErrorKind::NonReducedGerm, "y^2 divides the germ");
  if (ay == 1) {
    ++count;  // the branch y = 0
    Supp g;
    for (const auto& [k, c] : f) g[{k.first, k.second - 1}] = c;
    f = std::move(g);
  }
  if (f.count({0, 0})) return count;  // unit germ: nothing more through the origin

  // compact edges of the lower-left Newton polygon
  std::map<long, long> minB;
  for (const auto& [k, c] : f) {
    auto it = minB.find(k.first);
    if (it == minB.end() || k.second < it->second) minB[k.first] = k.second;
  }
  std::vector<std::pair<long, long>> hull;
  for (const auto& [a, b] : minB) {
    while (hull.size() >= 2) {
      auto [a1, b1] = hull[hull.size() - 2];
      auto [a2, b2] = hull[hull.size() - 1];
      if ((a2 - a1) * (b - b1) - (a - a1) * (b2 - b1) <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back({a, b});
  }
  for (size_t e = 0; e + 1 < hull.size(); ++e) {
    auto [a1, b1] = hull[e];
    auto [a2, b2] = hull[e + 1];
    if (b2 >= b1) continue;  // only strictly descending edges carry branches
    long da = a2 - a1, db = b1 - b2;
    long g = std::gcd(da, db);
    long qs = da / g, ps = db / g;
    long we = ps * a1 + qs * b1;
    UPoly phi;
    for (const auto& [k, c] : f) {
      if (ps * k.first + qs * k.second == we && (k.first - a1) % qs == 0) {
        long t = (k.first - a1) / qs;
        if (static_cast<long>(phi.size()) < t + 1) phi.resize(t + 1, Rational(0));
        phi[t] += c;
      }
    }
    utrim(phi);
    for (const auto& [part, mult] : squarefreeParts(phi)) {
      if (mult == 1) {
        // simple roots: one branch per root, rational or not
        count += udeg(part);
        continue;
      }
      auto roots = rationalRoots(part);
      if (static_cast<long>(roots.size()) < udeg(part)) {
        throw Error(ErrorKind::ExtensionFieldRecursionUnsupported,
                    "repeated root of an irreducible factor of degree >= 2; "
                    "recursion in a proper field extension is unsupported");
      }
      for (const Rational& xi : roots) {
        // x = x1^qs, y = x1^ps (xi + y1), divide by x1^we:
        // x^a y^b contributes C(b, m) xi^(b-m) x1^(w-we) y1^m for each m.
        Supp g2;
        for (const auto& [k, c] : f) {
          long wgt = ps * k.first + qs * k.second;
          Rational xpow(1);
          for (long m = k.second; m >= 0; --m) {
            Rational coef = c * Rational(mpq_class(binom(k.second, m))) * xpow;
            auto key = std::pair{wgt - we, m};
            auto it = g2.find(key);
            if (it == g2.end()) {
              if (!coef.isZero()) g2[key] = coef;
            } else {
              it->second += coef;
              if (it->second.isZero()) g2.erase(it);
            }
            xpow *= xi;
          }
        }
        count += branchesRec(std::move(g2), depth + 1);
      }
    }
  }
  return count;
}

}  // namespace

long branchCount(const CurveGerm& g) {
  if (!isReduced(g.f)) {
    throw Error(ErrorKind::NonReducedGerm, "curve polynomial has a square factor");
  }
  return branchesRec(toSupp(g.f), 0);
}

long delta(const CurveGerm& g, const ColengthOptions& opts) {
  long mu = milnor(g, opts);
  long r = branchCount(g);
  long twice = mu + r - 1;
  if (twice % 2 != 0) {
    throw Error(ErrorKind::ParityViolation, "milnor + branches - 1 is odd");
  }
  return twice / 2;
}

ClassicalInvariants classicalInvariants(const CurveGerm& g, const ColengthOptions& opts) {
  ClassicalInvariants out;
  out.multiplicity = multiplicity(g);
  out.milnor = milnor(g, opts);
  out.tjurina = tjurina(g, opts);
  out.branches = branchCount(g);
  long twice = out.milnor + out.branches - 1;
  if (twice % 2 != 0) {
    throw Error(ErrorKind::ParityViolation, "milnor + branches - 1 is odd");
  }
  out.delta = twice / 2;
  return out;
}

CurveReport curveInvariants(const CurveGerm& g, long j, const SolverOptions& sopts,
                            const ColengthOptions& copts) {
  CurveReport rep;
  rep.classical = classicalInvariants(g, copts);
  rep.bundle = fromCurve(g.f, j);
  rep.instanton = instantonNumbers(rep.bundle, sopts);
  return rep;
}

}  // namespace instanton
