#pragma once

// Command-line front end.  Exit codes: 0 success, 2 validation failure,
// 3 size cap exceeded, 4 parse error.

#include <ostream>
#include <string>
#include <vector>

namespace proetale::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace proetale::cli
