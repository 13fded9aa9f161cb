#ifndef BCC_CLI_HPP
#define BCC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace bcc::cli {

/// Runs the bcc command line. Exit codes: 0 success, 1 mathematical or
/// hypothesis failure, 2 usage/io/parse failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcc::cli

#endif
