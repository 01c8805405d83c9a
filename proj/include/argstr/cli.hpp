#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace argstr {

/// Runs the command line (without the program name). Exit codes: 0 ok,
/// 1 domain failure (invalid theory under `check`, failed expectation,
/// no convergence), 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace argstr
