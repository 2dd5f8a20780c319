#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hieroglyph {

// Entry point of the `hieroglyph` tool. args[0] is the program name.
// Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace hieroglyph
