#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tfvs {

// Entry point shared by the tfvs binary and the tests.  args excludes the
// program name.  Returns the process exit code: 0 success, 1 usage/parse or
// precondition failure, 2 internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tfvs
