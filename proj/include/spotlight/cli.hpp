#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spotlight::cli {

// Runs one CLI command. `args` excludes the program name.
//
// Exit codes: 0 success, 1 verification failure, 2 argument error
// (argument errors also print usage hints to `err`).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace spotlight::cli
