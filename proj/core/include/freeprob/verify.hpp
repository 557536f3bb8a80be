#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace freeprob {

enum class CheckStatus { Pass, Fail, Finding };

/// A Finding is an expected exact divergence between a closed-form reading
/// and its validating oracle, reported with the exact correction; it does
/// not fail the suite.
struct CheckResult {
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct Check {
  std::string id;
  /// Acceptance criterion this check belongs to (1..12; 0 for the extra
  /// property suite).
  int criterion = 0;
  std::function<CheckResult()> run;
};

/// The full deterministic identity suite.
std::vector<Check> verification_suite();

struct SuiteOutcome {
  int passed = 0;
  int failed = 0;
  int findings = 0;
  double seconds = 0.0;
  std::vector<std::pair<std::string, CheckResult>> results;
  bool ok() const { return failed == 0; }
};

/// Runs every check in order, streaming one status line per check when a
/// stream is given.
SuiteOutcome run_verification(std::ostream* out);

}  // namespace freeprob
