#pragma once

#include <string>
#include <vector>

namespace mwa {

// Command-line entry point, callable from tests.
// Exit codes: 0 success, 2 usage, 3 input validation, 4 guarantee violated
// under --oracle-check.
int cli_main(const std::vector<std::string>& args);

}  // namespace mwa
