#ifndef NORMCOV_TOOLS_CLI_HPP
#define NORMCOV_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace normcov::cli {

enum ExitCode { kOk = 0, kPropertyFails = 1, kUsage = 2, kResource = 3 };

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace normcov::cli

#endif
