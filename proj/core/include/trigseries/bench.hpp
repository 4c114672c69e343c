#pragma once

// Wall-clock comparison of the direct sum against the closed form for one
// (theorem, n, input). Runs single-threaded; callers must not run two
// timings concurrently.

#include <vector>

#include "trigseries/verify_engine.hpp"

namespace trigseries::bench {

inline constexpr int kMinReps = 3;

struct BenchRecord {
  verify::TheoremId theorem = verify::TheoremId::t2_3;
  int n = 0;
  verify::SampleInput input;
  int reps = 0;
  double naive_time = 0.0;   ///< seconds, median over reps
  double closed_time = 0.0;  ///< seconds, median over reps
  double speedup = 0.0;      ///< naive_time / closed_time
  double residual = 0.0;     ///< verify residual between the two values
  double tolerance = 0.0;
  bool residual_ok = false;  ///< residual within tolerance
  bool below_timer_resolution = false;  ///< a median is under 100 clock ticks
  std::vector<double> naive_samples;    ///< raw per-rep timings, seconds
  std::vector<double> closed_samples;
};

/// Smallest observable positive step of the steady clock, in seconds.
double timer_resolution();

/// Times the oracle and the closed form `reps` times each and records
/// medians. Throws std::invalid_argument when reps < kMinReps or the input
/// does not fit the theorem, and PoleError when an angular input is inside
/// the pole guard.
BenchRecord time_pair(verify::TheoremId theorem, int n, const verify::SampleInput& input,
                      int reps, double pole_guard = kDefaultPoleGuard,
                      double tolerance = verify::kDefaultTolerance);

}  // namespace trigseries::bench
