#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclotomo {

/// Command-line front end. Returns the process exit code: 0 on success,
/// 1 when a verification fails or a collision is found (verb-dependent),
/// 2 on invalid input. Exactly one JSON document is written to out.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace cyclotomo
