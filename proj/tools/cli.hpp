#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qverma::cli {

/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or config error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qverma::cli
