#ifndef DOTSEG_CLI_HPP
#define DOTSEG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dotseg::cli {

// Runs one `dotseg` invocation. `args` excludes the program name. Machine
// output goes to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dotseg::cli

#endif
