#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace lowsnr {

struct CheckResult {
  bool passed = false;
  std::string detail;
};

struct Check {
  std::string name;
  std::function<CheckResult()> run;
};

/// Cross-module invariant battery: special-function residuals, the closed-form
/// vs quadrature oracle, branch continuity, bound ordering, monotonicity and
/// limit behavior.  Runs in seconds.
std::vector<Check> fast_checks();

/// fast_checks plus the Monte Carlo batteries (multi-seed estimator
/// consistency and the two-sampling-path agreement test).
std::vector<Check> full_checks(std::uint64_t seed, std::size_t n_samples);

/// Run every check, print one pass/fail line each plus a summary; returns the
/// number of failures (0 means all passed).
int run_checks(const std::vector<Check>& checks, std::ostream& os);

}  // namespace lowsnr
