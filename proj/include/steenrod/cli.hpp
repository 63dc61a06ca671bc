#ifndef STEENROD_CLI_HPP
#define STEENROD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace steenrod::cli {

/// Runs one CLI command. Exit status: 0 on success, 2 on parse or usage
/// errors, 3 on domain errors. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steenrod::cli

#endif
