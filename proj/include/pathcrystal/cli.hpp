#ifndef PATHCRYSTAL_CLI_HPP
#define PATHCRYSTAL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace pathcrystal {

// Command-line front end.  args excludes the program name.  Exit codes:
// 0 success / verification passed, 1 verification mismatch, 2 invalid
// configuration or usage, 3 node cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pathcrystal

#endif
