#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylcurves {

enum ExitCode { exit_ok = 0, exit_internal = 1, exit_argument = 2, exit_domain = 3 };

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace weylcurves
