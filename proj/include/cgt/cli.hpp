#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgt {

// Runs one CLI command.  Exit codes: 0 for a definite answer (including
// "no Carter subgroup"), 1 for usage/parse errors, 2 for capacity or budget
// failures.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgt
