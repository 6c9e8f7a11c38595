#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ob {

// Runs the command-line tool in-process. args excludes the program name.
// Returns the exit code: 0 success, 1 domain/parse error, 2 usage error.
// `in` backs the '-' input path; all regular output goes to `out`,
// diagnostics and move logs to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ob
