#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hchroma {

/// Runs the command line `args` (without the program name). Reports go to
/// `out`; failures print one line "error: <kind>: <message>" to `err`.
/// Returns 0 on success, 1 on usage errors, 2 on library errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hchroma
