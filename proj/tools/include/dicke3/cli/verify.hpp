#pragma once

// Randomized invariant suites behind `dicke3 verify`. Samples come from a
// fixed-seed generator, so a report is reproducible from (scope, samples,
// seed).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dicke3::cli {

struct CheckResult {
  std::string scope;
  std::string name;
  long passed = 0;
  long total = 0;
  /// Largest residual seen (or the measured value for informational checks).
  double worst = 0.0;
  double threshold = 0.0;
  /// Full parameter set of the first failing sample, for replay.
  std::string failing_sample;
  /// Measured and printed, never fails the run.
  bool informational = false;

  bool ok() const noexcept { return informational || passed == total; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const noexcept;
};

/// all, model, gauge-reduction, resonance, berry, offdiag, ep, extremum,
/// stability, continuity, ed
const std::vector<std::string>& verify_scopes();

/// Throws ValidationError for an unknown scope or samples < 1.
VerifyReport run_verify(const std::string& scope, int samples, std::uint64_t seed);

void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace dicke3::cli
