#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eg::cli {

// Exit codes: 0 success (valid, theorem, found), 1 checked and negative,
// 2 usage or input error. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace eg::cli
