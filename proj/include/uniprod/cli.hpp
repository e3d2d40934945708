#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uniprod::cli {

// Exit codes: 0 success/affirmative, 1 definitive negative, 2 input error,
// 3 budget exhausted, 4 internal error.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace uniprod::cli
