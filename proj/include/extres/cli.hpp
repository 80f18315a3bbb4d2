#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extres::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMathFailure = 1;
inline constexpr int kInputError = 2;

// args excludes the program name. `in` is read when no ideal is given inline
// or by --file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace extres::cli
