#ifndef HYPERLAP_CLI_HPP
#define HYPERLAP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperlap {

// Runs one command line (without the program name). Returns the process
// exit status: 0 success, 1 input or usage error, 2 internal or budget error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hyperlap

#endif
