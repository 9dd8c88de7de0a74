#pragma once

// Acceptance suite. Every criterion is pinned in code with its tolerance and
// prints one pass/fail line; the CLI selftest command and the ctest
// acceptance binary both run through here. Artifacts (figure CSV/SVG,
// verification and adjudication reports) are written into out_dir.

#include <string>
#include <vector>

namespace mcfsol {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// seed drives the randomized sweeps (oracle equivalence, quartic identity,
// triviality draws); the artifacts themselves are seed-independent.
std::vector<CriterionResult> run_acceptance(const std::string& out_dir,
                                            unsigned long seed = 20240811);

bool all_passed(const std::vector<CriterionResult>& results);

// "criterion N: PASS/FAIL  name (detail) [x.xs]"
std::string format_result_line(const CriterionResult& r);

}  // namespace mcfsol
