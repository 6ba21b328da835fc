#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charvar {

/// Runs the command line `args` (without the program name). Input tuples are
/// read from the named file or from `in`; results go to `out` or --out.
/// Returns 0 on success, 1 if a verification fails, 2 on bad input.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace charvar
