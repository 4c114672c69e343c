#pragma once

// trigseries command-line surface: verify, table, gauss-product, bench.
//
// Exit codes: 0 pass, 1 identity or residual failure, 2 usage or domain
// error.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trigseries/exact_core.hpp"
#include "trigseries/verify_engine.hpp"

namespace trigseries::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Malformed command-line value.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "a..b", inclusive, integers.
verify::IntRange parse_range(std::string_view text);

/// Decimal radians, or a pi literal: "pi", "pi/4", "3pi/4", "3*pi/4", "-pi/2".
double parse_angle(std::string_view text);

/// "x1,y1;x2,y2;..." Rejects (0, 0) factors.
FactorList parse_factors(std::string_view text);

/// "x,y".
Factor parse_point(std::string_view text);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trigseries::cli
