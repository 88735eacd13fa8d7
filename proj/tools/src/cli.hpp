#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfkit::cli {

/// Exit codes: 0 every check passed, 1 some check failed, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfkit::cli
