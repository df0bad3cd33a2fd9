#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "instanton/cohomology.hpp"
#include "instanton/rational.hpp"

namespace instanton {

/// Runtime configuration. Defaults reproduce the full acceptance suite with
/// no config file and no flags. File format: flat `key = value` lines,
/// '#' comments; command-line flags override file values.
struct RunConfig {
  std::string format = "table";  // json | csv | table
  std::uint64_t seed = 7;
  long samples = 200;
  bool grid = false;
  long maxWindow = 0;       // cap on the window iMax; 0 = uncapped
  long maxDoublings = 3;    // stabilization schedule length - 1
  long exhaustiveCap = 100000;
  long degreeCap = 0;       // colength degree cap; 0 = adaptive default
  long charge = -1;         // strata --charge: local moduli summary mode
  long maxJ = 3;            // strata --max-j
  std::string outDir = "."; // csv output directory for `tables`
  std::vector<Rational> gridValues = {Rational(-1), Rational(0), Rational(1)};

  SolverOptions solverOptions() const {
    SolverOptions s;
    s.maxDoublings = maxDoublings;
    s.iMaxCap = maxWindow;
    return s;
  }
};

/// Merges `key = value` assignments from a config file into cfg.
void loadConfigFile(const std::string& path, RunConfig& cfg);
void applyConfigValue(const std::string& key, const std::string& value, RunConfig& cfg);

// Command entry points; each renders the report in cfg.format to stdout and
// returns the process exit code (0 ok, 4 table mismatch).
int cmdCurve(const std::string& poly, long j, const RunConfig& cfg);
int cmdClassical(const std::string& poly, const RunConfig& cfg);
int cmdBundle(const std::string& poly, long j, const RunConfig& cfg);
int cmdStrata(long j, const RunConfig& cfg);
int cmdTables(const RunConfig& cfg);

}  // namespace instanton
