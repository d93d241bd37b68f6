#ifndef MOPS_CLI_HPP
#define MOPS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mops {

// Runs one command; args exclude the program name. Returns the exit code:
// 0 success, 2 invalid input or domain error, 3 pole or convergence failure,
// 1 internal error.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mops

#endif
