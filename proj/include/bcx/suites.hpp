#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcx/bicomplex.hpp"

namespace bcx {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int trials = 200;
  int dim = 6;
  int degree = 32;
  Tolerance tol{1e-8, 0.0};
  std::vector<std::string> suites;  // empty = run everything
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  long trials = 0;
  std::vector<double> max_violation;  // componentwise where applicable
  double wall_ms = 0.0;
};

struct Report {
  SuiteConfig config;
  std::vector<SuiteResult> results;  // sorted by suite name
  bool overall_pass = false;
};

std::vector<std::string> suite_names();

// Throws InvalidConfigError on out-of-range parameters.
void validate_config(const SuiteConfig& cfg);

// Runs the selected (or all) suites. Identical configs produce identical
// reports; unknown suite names throw UnknownSuiteError.
Report run_verify(const SuiteConfig& cfg);

// Deterministic serialization: timing is deliberately omitted so identical
// configs serialize byte-identically.
std::string report_to_json(const Report& r);

// Human-readable table; includes per-suite wall time.
std::string report_to_text(const Report& r);

}  // namespace bcx
