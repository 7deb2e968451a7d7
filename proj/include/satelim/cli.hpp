#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace satelim {

// Exit codes: 0 success, 1 usage or parse failure, 2 computation failure
// (arithmetic, overflow, budget), 3 the elimination routes disagreed.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satelim
