#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace cube_orbits::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of `cube-orbits`. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cube_orbits::cli
