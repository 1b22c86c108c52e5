#pragma once
// Named end-to-end checks covering the whole library, runnable from the CLI
// and from the acceptance binary. Deterministic for a fixed seed (timings
// aside). Each check returns a witness string on the first failure it finds.

#include <cstdint>
#include <string>
#include <vector>

namespace jinf {

struct SuiteConfig {
  std::uint64_t seed = 12345;
  std::string filter;  // substring match on check names; empty runs all
  bool includeMutant = false;
};

struct CheckResult {
  enum class Status { Pass, Fail, Error };

  std::string name;
  Status status = Status::Pass;
  std::string witness;  // first failure, or the error text
  std::int64_t millis = 0;
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool allPassed() const;
};

std::vector<std::string> suiteCheckNames(bool includeMutant = false);

SuiteReport runSuite(const SuiteConfig& config = {});

std::string renderReportText(const SuiteReport& report);
std::string renderReportJson(const SuiteReport& report);

}  // namespace jinf
