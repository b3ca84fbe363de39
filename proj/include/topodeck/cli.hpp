#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topodeck {

/// Runs one topodeck command. args excludes the program name. All output is
/// byte-stable across runs. Exit codes: 0 success, 1 domain error (e.g.
/// deck of a non-compact graph, bad partition), 2 parse error (bad command
/// line or malformed graph file).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace topodeck
