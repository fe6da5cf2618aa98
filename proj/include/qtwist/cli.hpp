#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtwist {

// Dispatches one subcommand and writes its JSON result to `out`.
// Returns 0 on success, 1 on unknown command or bad usage (message on
// `err`), 2 on a domain error (machine-readable {"error": ...} on `out`).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtwist
