#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rgh {

// Full command-line driver; `args` excludes the program name.  Returns the
// process exit code: 0 success, 1 usage or input errors, 2 budget exhausted,
// 3 internal errors or failed checks.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rgh
