#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddg {

// args excludes the program name; returns the process exit code
// (0 ok, 2 verification failure, 64 usage / malformed input)
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ddg
