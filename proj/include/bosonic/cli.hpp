#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bosonic {

// Command-line front end. Deterministic output for fixed arguments; exit
// code 0 on success, 1 when a requested verification fails, 2 on usage
// errors. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bosonic
