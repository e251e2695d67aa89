#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace sigmat::cli {

// Exit codes: 0 success (no refutation), 2 usage/parse error, 3 at least
// one refuted row, 4 budget refusal, 1 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigmat::cli
