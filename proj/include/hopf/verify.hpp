#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hopf {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed;
  double measured;   ///< worst error, or the measured quantity
  double threshold;
};

/// Names accepted by run_verify besides "all".
const std::vector<std::string>& verify_suites();

/// Runs the invariant checks of one suite ("all" runs every suite). Sampling
/// is seeded, so the results are reproducible. Throws GeometryError
/// (invalid_argument) for an unknown suite name.
std::vector<CheckResult> run_verify(std::string_view suite);

/// Fixed-width table, one row per check, and a summary line.
std::string format_results(const std::vector<CheckResult>& results);

}  // namespace hopf
