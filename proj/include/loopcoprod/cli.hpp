#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loopcoprod {

// Runs one command: results on out, diagnostics on err. Returns the process
// exit status: 0 success, 1 a check verb found a violated identity, 2 bad
// input. The vector form takes arguments without the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace loopcoprod
