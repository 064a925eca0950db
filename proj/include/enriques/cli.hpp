#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace enriques {

// The whole command-line tool, separated from main() so tests can drive it.
// `args` excludes the program name.  Returns the process exit code:
// 0 success, 1 verification failure, 2 usage/parse errors.  `in` backs the
// "-" stdin convention for diagram keys.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace enriques
