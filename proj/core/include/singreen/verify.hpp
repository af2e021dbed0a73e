// SPDX-License-Identifier: Apache-2.0

#ifndef SINGREEN_VERIFY_HPP
#define SINGREEN_VERIFY_HPP

#include <string>
#include <vector>

namespace singreen::verify {

/// One acceptance criterion outcome.  `detail` is rendered with the shared
/// fixed numeric format so reports are byte-stable across runs.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double elapsed_seconds = 0.0;
};

CriterionResult special_function_kernel();      // 1
CriterionResult chi_large_radius_asymptote();   // 2
CriterionResult kernel_norm_law();              // 3
CriterionResult coulomb_short_range_fit();      // 4
CriterionResult screened_constant_shift();      // 5
CriterionResult three_class_theorem();          // 6
CriterionResult born_closed_forms();            // 7
CriterionResult green_structural_invariants();  // 8
CriterionResult zero_range_closure();           // 9
/// cli_path: executable to re-run for the byte-identity check; empty
/// string selects the in-process emission check only.
CriterionResult determinism(const std::string& cli_path);  // 10

/// Run every criterion in order.
std::vector<CriterionResult> run_all(const std::string& cli_path = "");

/// "PASS  3  kernel-norm-law   <detail>" lines, one per criterion.
std::string render_report(const std::vector<CriterionResult>& results);

}  // namespace singreen::verify

#endif
