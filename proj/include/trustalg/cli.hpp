#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trustalg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitIo = 2;

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace trustalg::cli
