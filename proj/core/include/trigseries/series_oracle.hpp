#pragma once

// Direct term-by-term evaluation of the left-hand sides. These are the
// brute-force references the closed forms are verified against, so they
// stay naive: plain left-to-right accumulation, no rewrites.
//
// Pole guards follow the closed_form conventions.

#include <cstdint>
#include <utility>

#include "trigseries/angle.hpp"
#include "trigseries/exact_core.hpp"

namespace trigseries {

/// (sum (-1)^k C(n,2k) x^(n-2k) y^(2k), sum (-1)^k C(n,2k+1) x^(n-2k-1) y^(2k+1)).
std::pair<BigInt, BigInt> binom_series_pair(std::int64_t x, std::int64_t y, std::uint64_t n);

/// (sum sin kx)^2 + (sum cos kx)^2 for k = 1..n.
double sin_cos_square_sum(int n, Angle x);

/// 1 + 2 sum cos kx for k = 1..m.
double cos_partial_sum(int m, Angle x);

/// sum (1/2^k) tan(x/2^k) for k = 1..n.
double tan_half_sum(int n, Angle x, double pole_guard = 0.0);

/// sum tan kx tan((k+1)x) for k = 1..n.
double tan_pair_sum(int n, Angle x, double pole_guard = 0.0);

/// sum tan kx [tan((k-1)x) + tan((k+1)x)] for k = 1..n.
double tan_triple_sum(int n, Angle x, double pole_guard = 0.0);

/// T_n(x) = sum tan kx for k = 1..n; n = 0 gives 0.
double tan_partial_sum(int n, Angle x, double pole_guard = 0.0);

}  // namespace trigseries
