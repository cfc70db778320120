#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cascade {

struct CheckResult {
  int id = 0;             // 1-based check number, stable across releases
  std::string name;       // short slug
  bool pass = false;
  double measured = 0.0;  // worst measured deviation (see detail for units)
  double threshold = 0.0; // bound `measured` is compared against
  std::string detail;     // the key numbers behind the verdict
};

struct ValidateReport {
  std::vector<CheckResult> checks;
  bool all_pass = true;
};

// Cross-engine validation suite. Failures are reported, never thrown; a
// check that throws internally is reported as failed with the error text.
ValidateReport run_validate();

// One line per check: "PASS  3 moments-vs-closed  measured=... (tol ...) ..."
void print_validate_report(const ValidateReport& report, std::ostream& out);

std::string validate_report_json(const ValidateReport& report);

}  // namespace cascade
