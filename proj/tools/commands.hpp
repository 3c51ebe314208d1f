#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace l2c::cli {

// Exit codes: 0 every check passed, 1 some mathematical check failed, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace l2c::cli
