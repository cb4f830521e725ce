#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orbitk {

struct CheckResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // includes documented-deviation notes
};

struct VerifyOptions {
  uint64_t seed = 1;
  bool full = true;  // fast level skips the larger Groebner and localization runs
};

/// Runs the acceptance battery; deterministic for a fixed seed.  Documented
/// deviations are assertions that the deviation reproduces exactly -- they
/// pass when the recorded values match.
std::vector<CheckResult> run_acceptance(const VerifyOptions& opts);

}  // namespace orbitk
