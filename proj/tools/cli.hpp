#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kdecomp::cli {

// Parses and runs one command line (without the program name).  Reports go
// to `out`, diagnostics to `err`.  Exit status: 0 success/pass, 1
// verification failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kdecomp::cli
