// Acceptance gate: runs every cross-engine consistency check and prints one
// PASS/FAIL line per check. Exit code 0 only when all checks hold.
#include <iostream>

#include "cascade/validate.hpp"

int main() {
  const cascade::ValidateReport report = cascade::run_validate();
  cascade::print_validate_report(report, std::cout);
  return report.all_pass ? 0 : 1;
}
