#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "npsplit/engine.hpp"

namespace npsplit {

struct CheckResult {
  std::string description;
  bool passed = false;
  std::string counterexample;  // nonempty whenever passed is false
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::string config_fingerprint;
  double wall_seconds = 0.0;

  bool all_passed() const;
};

struct SuiteBounds {
  uint64_t maxlen = 10;          // exhaustive membership scans go up to this length
  uint64_t upto = 100000;        // r-table suites materialize this far
  uint64_t gate_upto = 10000;    // gate-oracle: all i up to here
  uint64_t rmax = 40;            // gate-oracle: all r_i up to here
  uint64_t require_blocks = 0;   // kway: fail unless this many complete blocks appear
};

std::vector<std::string> suite_names();

// Runs one named suite. Names: partition, rtable, noncircular, gate-oracle,
// compose, enumeration, kway. Throws ConfigError for an unknown name or a
// config the suite cannot apply to.
SuiteReport run_suite(const std::string& name, const EngineConfig& config,
                      const SuiteBounds& bounds);

void print_report(std::ostream& os, const SuiteReport& report);

}  // namespace npsplit
