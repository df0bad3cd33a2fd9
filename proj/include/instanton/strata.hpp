#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "instanton/bundle.hpp"
#include "instanton/cohomology.hpp"

namespace instanton {

/// SplitMix64; the fixed PRNG behind every randomized sweep. Same seed,
/// same stream, on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, n), n > 0; modulo reduction (bias immaterial here).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

enum class SweepMode { exhaustiveGrid, randomSample };

struct SweepSpec {
  long j = 2;
  SweepMode mode = SweepMode::exhaustiveGrid;
  std::vector<Rational> coefficientSet = {Rational(-1), Rational(0), Rational(1)};
  long sampleCount = 0;
  std::uint64_t seed = 0;
};

struct SweepOptions {
  long exhaustiveCap = 100000;   // max grid size |set|^J
  long representativesCap = 3;   // representatives stored per stratum
  SolverOptions solver;
};

struct StratumRecord {
  long width = 0;
  long height = 0;
  long charge = 0;
  long sampleCount = 0;
  std::vector<CanonicalCoefficients> representatives;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<StratumRecord> records;  // sorted by (charge, width)
  Window certifyingWindow;             // largest certifying window seen
  bool splitPairAttained = false;      // (j(j+1)/2, j(j-1)/2) observed
  bool genericPairAttained = false;    // (1, j-1) observed
  long minCharge = 0;
  long maxCharge = 0;
};

/// Draws a dense random canonical coefficient vector: numerators uniform in
/// +-{1..9}, denominators uniform in {1..9}.
CanonicalCoefficients randomCanonical(long j, SplitMix64& rng);

SweepResult sweep(const SweepSpec& spec, const SweepOptions& opts = {});

struct ModuliSummary {
  long charge = 0;
  long maxJ = 0;
  struct Entry {
    long j = 0;
    StratumRecord record;
    long observedParamCount = 0;  // rank of representatives - 1 (projective)
  };
  std::vector<Entry> entries;
};

/// Aggregates sweep records with the given local charge across j <= maxJ.
ModuliSummary localModuliSummary(long charge, long maxJ, const SweepOptions& opts = {},
                                 std::uint64_t seed = 7);

struct EmbeddingCheck {
  TransitionData source;
  TransitionData image;
  bool imageInCanonicalRange = false;
  InstantonNumbers imageNumbers;
  InstantonNumbers imageNumbersWithJunk;  // removable terms added pre-embedding
  bool invariantsMatch = false;
};

struct EmbeddingReport {
  long j = 0;
  std::vector<EmbeddingCheck> checks;
  long violations = 0;
};

/// For sampled p: the embedding image must stay canonical and the image
/// instanton numbers must be blind to removable terms added before embedding.
EmbeddingReport checkEmbedding(long j, const SweepSpec& spec, const SweepOptions& opts = {});

}  // namespace instanton
