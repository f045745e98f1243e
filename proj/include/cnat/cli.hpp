#pragma once

#include <iosfwd>

namespace cnat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  ///< failed check or invalid input object
inline constexpr int kExitUsage = 2;     ///< bad arguments, I/O or parse error

/// Default ceiling for enumeration-backed commands without --unsafe-large.
inline constexpr int kEnumerationLimit = 8;

/// Runs the `cnat` command line. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cnat::cli
