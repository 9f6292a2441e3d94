#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catcw::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

/// Runs one command; `args` excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace catcw::cli
