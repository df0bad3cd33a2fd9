#include "instanton/strata.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "instanton/errors.hpp"
#include "instanton/linalg.hpp"

namespace instanton {

namespace {

// grid odometer over coefficientSet^J in lexicographic slot order
bool advance(std::vector<size_t>& digits, size_t base) {
  for (size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < base) return true;
    digits[k] = 0;
  }
  return false;
}

long powCapped(long base, long exp, long cap) {
  long v = 1;
  for (long k = 0; k < exp; ++k) {
    v *= base;
    if (v > cap) return cap + 1;
  }
  return v;
}

Window maxWindow(const Window& a, const Window& b) {
  return {std::min(a.iMin, b.iMin), std::max(a.iMax, b.iMax),
          std::min(a.lMin, b.lMin), std::max(a.lMax, b.lMax)};
}

}  // namespace

CanonicalCoefficients randomCanonical(long j, SplitMix64& rng) {
  CanonicalCoefficients out;
  out.j = j;
  long J = canonicalCoefficientCount(j);
  for (long k = 0; k < J; ++k) {
    long num = 1 + static_cast<long>(rng.below(9));
    if (rng.below(2) == 0) num = -num;
    long den = 1 + static_cast<long>(rng.below(9));
    out.coeffs.push_back(Rational(num, den));
  }
  return out;
}

SweepResult sweep(const SweepSpec& spec, const SweepOptions& opts) {
  if (spec.j < 0) throw Error(ErrorKind::BadConfig, "splitting type must be nonnegative");
  SweepResult result;
  result.spec = spec;

  std::vector<CanonicalCoefficients> samples;
  long J = canonicalCoefficientCount(spec.j);
  if (spec.mode == SweepMode::exhaustiveGrid) {
    long base = static_cast<long>(spec.coefficientSet.size());
    if (base == 0) throw Error(ErrorKind::BadConfig, "empty coefficient set");
    if (powCapped(base, J, opts.exhaustiveCap) > opts.exhaustiveCap) {
      throw Error(ErrorKind::InfeasibleGrid,
                  "exhaustive grid larger than the configured cap; use random sampling");
    }
    std::vector<size_t> digits(static_cast<size_t>(J), 0);
    do {
      CanonicalCoefficients c;
      c.j = spec.j;
      for (size_t k = 0; k < digits.size(); ++k) {
        c.coeffs.push_back(spec.coefficientSet[digits[k]]);
      }
      samples.push_back(std::move(c));
    } while (advance(digits, static_cast<size_t>(base)));
  } else {
    SplitMix64 rng(spec.seed);
    for (long t = 0; t < spec.sampleCount; ++t) samples.push_back(randomCanonical(spec.j, rng));
  }

  std::map<std::pair<long, long>, StratumRecord> buckets;  // (charge, width) -> record
  Window certifying{0, 0, 0, 0};
  bool haveWindow = false;
  for (const auto& c : samples) {
    TransitionData d = c.toData();
    CertifiedNumbers n = instantonNumbers(d, opts.solver);
    Window w = maxWindow(n.widthWindow, n.heightWindow);
    certifying = haveWindow ? maxWindow(certifying, w) : w;
    haveWindow = true;
    auto key = std::pair{n.numbers.charge, n.numbers.width};
    StratumRecord& rec = buckets[key];
    rec.width = n.numbers.width;
    rec.height = n.numbers.height;
    rec.charge = n.numbers.charge;
    rec.sampleCount += 1;
    if (static_cast<long>(rec.representatives.size()) < opts.representativesCap) {
      rec.representatives.push_back(c);
    }
  }

  for (auto& [key, rec] : buckets) result.records.push_back(std::move(rec));
  result.certifyingWindow = certifying;
  const long j = spec.j;
  result.minCharge = result.records.empty() ? 0 : result.records.front().charge;
  result.maxCharge = result.records.empty() ? 0 : result.records.back().charge;
  for (const auto& rec : result.records) {
    if (rec.width == j * (j + 1) / 2 && rec.height == j * (j - 1) / 2) {
      result.splitPairAttained = true;
    }
    if (j >= 1 && rec.width == 1 && rec.height == j - 1) result.genericPairAttained = true;
  }
  return result;
}

ModuliSummary localModuliSummary(long charge, long maxJ, const SweepOptions& opts,
                                 std::uint64_t seed) {
  if (charge < 0 || maxJ < 0) throw Error(ErrorKind::BadConfig, "bad moduli parameters");
  ModuliSummary out;
  out.charge = charge;
  out.maxJ = maxJ;
  for (long j = 0; j <= maxJ; ++j) {
    SweepSpec spec;
    spec.j = j;
    long J = canonicalCoefficientCount(j);
    if (powCapped(3, J, opts.exhaustiveCap) <= opts.exhaustiveCap) {
      spec.mode = SweepMode::exhaustiveGrid;
    } else {
      spec.mode = SweepMode::randomSample;
      spec.sampleCount = 200;
      spec.seed = seed + static_cast<std::uint64_t>(j);
    }
    SweepResult res = sweep(spec, opts);
    for (const auto& rec : res.records) {
      if (rec.charge != charge) continue;
      ModuliSummary::Entry e;
      e.j = j;
      e.record = rec;
      // observed parameter count: projective rank of the representatives
      if (!rec.representatives.empty()) {
        long cols = static_cast<long>(rec.representatives.front().coeffs.size());
        SparseMatrix m(static_cast<long>(rec.representatives.size()), cols);
        for (size_t r = 0; r < rec.representatives.size(); ++r) {
          for (long c = 0; c < cols; ++c) {
            m.set(static_cast<long>(r), c, rec.representatives[r].coeffs[c]);
          }
        }
        e.observedParamCount = std::max(0L, rank(m) - 1);
      }
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

EmbeddingReport checkEmbedding(long j, const SweepSpec& spec, const SweepOptions& opts) {
  if (j < 2) throw Error(ErrorKind::BadConfig, "embedding check needs j >= 2");
  EmbeddingReport out;
  out.j = j;

  std::vector<TransitionData> samples;
  if (spec.mode == SweepMode::exhaustiveGrid) {
    SweepSpec gridSpec = spec;
    gridSpec.j = j;
    SweepResult res = sweep(gridSpec, opts);
    for (const auto& rec : res.records) {
      for (const auto& c : rec.representatives) samples.push_back(c.toData());
    }
  } else {
    SplitMix64 rng(spec.seed);
    for (long t = 0; t < spec.sampleCount; ++t) {
      samples.push_back(randomCanonical(j, rng).toData());
    }
  }

  SplitMix64 junkRng(spec.seed ^ 0xabcdef1234567890ULL);
  for (const auto& d : samples) {
    EmbeddingCheck chk;
    chk.source = d;
    chk.image = embed(d);
    chk.imageInCanonicalRange = isCanonical(chk.image);
    chk.imageNumbers = instantonNumbers(chk.image, opts.solver).numbers;
    // add removable monomials to p before embedding; the image numbers
    // must not notice
    LaurentPoly junked = d.p;
    for (int t = 0; t < 2; ++t) {
      long i = 1 + static_cast<long>(junkRng.below(static_cast<std::uint64_t>(2 * j)));
      bool high = junkRng.below(2) == 0;
      long l = high ? j + static_cast<long>(junkRng.below(3))
                    : i - j - static_cast<long>(junkRng.below(3));
      long num = 1 + static_cast<long>(junkRng.below(5));
      junked.addTerm(l, i, Rational(num));
    }
    TransitionData junkedImage = embed({d.j, junked});
    chk.imageNumbersWithJunk = instantonNumbers(junkedImage, opts.solver).numbers;
    chk.invariantsMatch = chk.imageNumbers == chk.imageNumbersWithJunk;
    if (!chk.imageInCanonicalRange || !chk.invariantsMatch) ++out.violations;
    out.checks.push_back(std::move(chk));
  }
  return out;
}

}  // namespace instanton
