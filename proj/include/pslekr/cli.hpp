#pragma once

// pslekr command line: `verify` runs suites and writes JSON reports,
// `dump` writes CSV tables.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid configuration.
// Invalid configurations are rejected before anything runs.

#include <iosfwd>

namespace pslekr {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pslekr
