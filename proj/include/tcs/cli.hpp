#pragma once

// Command-line front end. Exit codes: 0 success (Uncovered and "none" are
// successes), 1 internal invariant violation, 2 input validation failure.

#include "tcs/census.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace tcs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

/// Result object for one census query:
///   {"case": ..., "count": {...}, "reduction_target": {...} | null,
///    "warnings": [...]?, "labels": {...}?}
nlohmann::json count_to_json(const BoundedSeifert& q);

/// Parses {r1, r2, slope, torsion}; torsion defaults to 0. Throws InputError.
BoundedSeifert query_from_json(const nlohmann::json& j);

/// One output line per nonblank input line, in input order. A malformed
/// line yields {"line": N, "error": "..."} and processing continues.
void run_batch(std::istream& in, std::ostream& out, unsigned threads = 0);

/// argv without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tcs::cli
