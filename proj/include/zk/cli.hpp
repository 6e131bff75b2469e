#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zk {

// Exit codes: 0 success, 1 parse/validation failure, 2 precondition
// failure, 3 internal-consistency error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zk
