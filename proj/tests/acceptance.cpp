// Acceptance gate: runs every end-to-end check once with the default seed and
// prints one PASS/FAIL line per check. Exit status 0 only when all pass.
#include <iostream>

#include "jinf/suite.hpp"

int main() {
  jinf::SuiteConfig config;
  config.includeMutant = true;
  const jinf::SuiteReport report = jinf::runSuite(config);
  for (const jinf::CheckResult& check : report.checks) {
    if (check.status == jinf::CheckResult::Status::Pass) {
      std::cout << "PASS " << check.name << "\n";
    } else {
      std::cout << "FAIL " << check.name << ": " << check.witness << "\n";
    }
  }
  return report.allPassed() ? 0 : 1;
}
