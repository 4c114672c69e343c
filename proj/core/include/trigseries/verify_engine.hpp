#pragma once

// Seeded verification sweeps: draw inputs for one identity, skip those near
// a singularity, compare the direct sum against the closed form and
// aggregate the residuals.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trigseries/angle.hpp"
#include "trigseries/closed_form.hpp"
#include "trigseries/exact_core.hpp"

namespace trigseries::verify {

enum class TheoremId {
  t2_1_cos,   ///< real part of the binomial expansion of (x+iy)^n
  t2_1_sin,   ///< imaginary part of the same expansion
  t2_1_pyth,  ///< squares of both parts sum to (x^2+y^2)^n
  c2_1_cos,   ///< alternating even binomial sum = 2^(n/2) cos(n pi/4)
  c2_1_sin,   ///< alternating odd binomial sum = 2^(n/2) sin(n pi/4)
  t2_2,       ///< Gaussian product parts are integers
  l2_1,       ///< 1 + 2 sum cos kx
  t2_3,       ///< (sum sin kx)^2 + (sum cos kx)^2
  t2_4,       ///< sum 2^-k tan(x/2^k)
  t2_5,       ///< sum tan kx tan(k+1)x
  t2_6,       ///< sum tan kx [tan(k-1)x + tan(k+1)x]
};

/// What a sample of the theorem consists of besides n.
enum class Domain {
  lattice,  ///< integer point (x, y)
  index,    ///< n alone
  factors,  ///< list of n Gaussian factors
  angular,  ///< real angle x
};

std::span<const TheoremId> all_theorems();
std::string_view name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view text);
Domain domain_of(TheoremId id);

/// Theorems whose both sides are compared in exact integer arithmetic.
bool is_exact(TheoremId id);

struct IntRange {
  int lo = 1;
  int hi = 1;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct AngleInterval {
  double lo = 0.0;
  double hi = kTwoPi;

  friend bool operator==(const AngleInterval&, const AngleInterval&) = default;
};

inline constexpr double kDefaultTolerance = 1e-8;

struct SamplePlan {
  TheoremId theorem = TheoremId::t2_3;
  IntRange n_range;
  int samples_per_n = 100;
  std::uint64_t seed = 42;
  double pole_guard = kDefaultPoleGuard;
  double tolerance = kDefaultTolerance;
  AngleInterval angle_interval;
};

/// Throws std::invalid_argument on an empty range, a non-positive guard,
/// tolerance or sample count, or an n below the theorem's minimum.
void validate(const SamplePlan& plan);

/// Name of the sample generator, embedded in every report.
inline constexpr std::string_view kPrngName = "mt19937_64/seed_seq(seed_lo,seed_hi,n)";

struct AngleInput {
  double x = 0.0;
};
struct LatticeInput {
  std::int64_t x = 0;
  std::int64_t y = 0;
};
struct IndexInput {};
struct FactorInput {
  FactorList factors;
};

using SampleInput = std::variant<AngleInput, LatticeInput, IndexInput, FactorInput>;

struct Sample {
  int n = 0;
  std::size_t index = 0;  ///< position within the draws for this n
  SampleInput input;
  bool skipped = false;   ///< within the pole guard; excluded from comparison
};

/// Smallest distance from the singular arguments of the theorem to their
/// poles. Only defined for angular theorems; throws std::invalid_argument
/// otherwise.
///
/// tan(kx) and cot x are measured on their own argument. Terms with a
/// contracted argument x/2^k (t2_4) are measured in units of x, because
/// the weighted term 2^-k cot(x/2^k) stays well conditioned as x/2^k -> 0.
double pole_distance(TheoremId theorem, int n, Angle x);

/// Deterministic draws for one n. Angular theorems draw samples_per_n
/// angles from the open angle interval; lattice theorems draw integer points
/// from [-9, 9]^2 minus the origin; factor theorems draw samples_per_n lists
/// of n factors with x_k in [-9, 9] \ {0} and y_k in [-9, 9]; index theorems
/// draw exactly one sample.
std::vector<Sample> draw_samples_for_n(const SamplePlan& plan, int n);

/// Concatenation of draw_samples_for_n over the whole range, in n order.
std::vector<Sample> draw_samples(const SamplePlan& plan);

/// One side of a comparison.
using Value = std::variant<double, BigInt, GaussianInt, CosSinPair>;

struct CheckResult {
  Value lhs;
  Value rhs;
  double rel_err = 0.0;
  bool pass = false;
};

/// Evaluates both sides for one sample.
///
/// Exact theorems pass iff the sides are equal, with rel_err 0. Angular
/// theorems use |lhs - rhs| / max(|lhs|, |rhs|, 1). t2_2 compares the
/// floating-point product against the exact Gaussian product, scaled by
/// max(prod |z_k|, 1). Pole errors propagate as PoleError.
CheckResult check_identity(TheoremId theorem, const Sample& sample, double tolerance,
                           double pole_guard = 0.0);

struct WorstCase {
  Sample sample;
  double rel_err = 0.0;
};

struct Failure {
  Sample sample;
  Value lhs;
  Value rhs;
  double rel_err = 0.0;
};

inline constexpr std::size_t kMaxRecordedFailures = 64;

struct IdentityReport {
  SamplePlan plan;
  std::size_t evaluated = 0;
  std::size_t skipped_near_pole = 0;
  double max_rel_err = 0.0;
  std::optional<WorstCase> worst_case;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;  ///< first kMaxRecordedFailures in (n, index) order
  bool pass = true;
  bool vacuous = false;           ///< nothing was compared
  std::string prng{kPrngName};
};

/// Runs check_identity over every non-skipped sample. `threads` > 1 splits
/// the n range across workers; the report does not depend on it.
IdentityReport sweep(const SamplePlan& plan, unsigned threads = 1);

}  // namespace trigseries::verify
