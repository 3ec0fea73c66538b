#pragma once

#include <iosfwd>

namespace cbf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one verb (construct, count, enumerate, verify, nonexpandable,
/// witness, maxset, compare). Words are read from `in` unless --input is
/// given; results go to `out` unless --output is given; diagnostics go to
/// `err`. Returns 0 on success, 1 when a set fails verification or is
/// expandable, 2 on usage or input errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cbf::cli
