#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoidforge::cli {

  inline constexpr int exit_ok            = 0;
  inline constexpr int exit_check_failure = 1;
  inline constexpr int exit_bad_input     = 2;

  // Runs one command line (without the program name), writing the report to
  // out and diagnostics to err. Returns the process exit status.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace monoidforge::cli
