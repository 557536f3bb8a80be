// Acceptance suite: runs the full identity catalog and reports one line per
// criterion.  Findings (expected exact divergences with a definitive
// correction attached) count as satisfied criteria; undiagnosed mismatches
// fail.  Criterion 12 is the wall-clock budget of the whole run.

#include <chrono>
#include <iostream>
#include <map>
#include <vector>

#include "freeprob/verify.hpp"

int main() {
  using namespace freeprob;

  static const std::map<int, const char*> kCriteria = {
      {1, "closed-form free cumulants equal noncrossing Moebius inversion (n <= 8)"},
      {2, "even star cumulants: g_n(0) = 0, coefficient identity with a_n (n <= 8), Haar limit (n <= 4)"},
      {3, "odd star cumulants equal brute-force cumulants (n <= 3), h_1 reproduced"},
      {4, "a_n closed form equals series reversion (n <= 8); P-polynomial integral identities settled exactly"},
      {5, "Jacobi moment routes agree exactly to order 12"},
      {6, "reversion oracle inverts z M(z) to order 8; b_1, b_2 pinned; closed-form variants settled; Q-polynomial integral identity settled"},
      {7, "power expansion exact (m <= 5, order 10); convolution identities exact (indices <= 10)"},
      {8, "H-coefficient lemma exact to order 6 (n <= 3); c-variants settled; S-transform inverse relations exact to order 6"},
      {9, "Schur function routes, xi-inverse, Verblunsky values gamma_0..gamma_2, first-iterate prefactor settled"},
      {10, "special-function identities exact (Pochhammer, Charlier, Laguerre, 3F2/2F1, binomial transform)"},
      {11, "numeric spot checks at 128-bit precision within 1e-20"},
      {12, "full suite wall clock under 300 s"},
  };

  const auto t0 = std::chrono::steady_clock::now();
  const SuiteOutcome outcome = run_verification(nullptr);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  struct Tally {
    int pass = 0, fail = 0, findings = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
  };
  std::map<int, Tally> tally;
  const auto checks = verification_suite();
  for (size_t i = 0; i < checks.size(); ++i) {
    const int c = checks[i].criterion;
    if (c == 0) continue;
    const auto& [id, res] = outcome.results[i];
    auto& t = tally[c];
    switch (res.status) {
      case CheckStatus::Pass:
        ++t.pass;
        break;
      case CheckStatus::Finding:
        ++t.findings;
        t.notes.push_back(id + ": " + res.detail);
        break;
      case CheckStatus::Fail:
        ++t.fail;
        t.failures.push_back(id + ": " + res.detail);
        break;
    }
  }

  bool all_ok = outcome.failed == 0;
  for (const auto& [num, text] : kCriteria) {
    if (num == 12) continue;
    const Tally& t = tally[num];
    const bool ok = t.fail == 0 && (t.pass + t.findings) > 0;
    all_ok = all_ok && ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << text;
    if (t.findings > 0) std::cout << " (" << t.findings << " adjudicated finding(s))";
    std::cout << "\n";
    for (const auto& f : t.failures) std::cout << "         failed: " << f << "\n";
    for (const auto& n : t.notes) std::cout << "         finding: " << n << "\n";
  }
  const bool time_ok = seconds < 300.0;
  all_ok = all_ok && time_ok;
  std::cout << (time_ok ? "[PASS]" : "[FAIL]") << " criterion 12: "
            << kCriteria.at(12) << " (" << seconds << " s)\n";

  std::cout << (all_ok ? "ACCEPTANCE: all criteria satisfied\n"
                       : "ACCEPTANCE: failures present\n");
  return all_ok ? 0 : 1;
}
