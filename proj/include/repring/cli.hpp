#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repring::cli {

inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repring::cli
