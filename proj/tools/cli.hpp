#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jinf {

// Runs one CLI invocation. `args` excludes the program name. Returns the
// process exit code: 0 for success / a true predicate, 1 for a failed check,
// a false predicate, or a domain error, 2 for usage and parse errors.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jinf
