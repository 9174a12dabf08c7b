#ifndef TIEDMON_TOOLS_CLI_HPP_
#define TIEDMON_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace tiedmon {

  // Runs the tiedmon command line on args (without the program name).
  // Returns 0 on success, 1 on a domain error, 2 on a usage error.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace tiedmon

#endif  // TIEDMON_TOOLS_CLI_HPP_
