#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcalc::cli {

// args excludes the program name. Returns 0 on success, 1 for usage or parse
// errors and 2 for domain errors; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcalc::cli
