#include "trigseries/verify_engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "trigseries/errors.hpp"
#include "trigseries/series_oracle.hpp"

namespace trigseries::verify {

namespace {

constexpr std::array kTheorems = {
    TheoremId::t2_1_cos, TheoremId::t2_1_sin, TheoremId::t2_1_pyth, TheoremId::c2_1_cos,
    TheoremId::c2_1_sin, TheoremId::t2_2,     TheoremId::l2_1,      TheoremId::t2_3,
    TheoremId::t2_4,     TheoremId::t2_5,     TheoremId::t2_6,
};

constexpr std::array<std::string_view, kTheorems.size()> kNames = {
    "t2_1_cos", "t2_1_sin", "t2_1_pyth", "c2_1_cos", "c2_1_sin", "t2_2",
    "l2_1",     "t2_3",     "t2_4",      "t2_5",     "t2_6",
};

constexpr std::int64_t kLatticeBound = 9;

// Uniform on [-bound, bound] by rejection, independent of the standard
// library's distribution implementations.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t bound) {
  const std::uint64_t span = static_cast<std::uint64_t>(2 * bound + 1);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return static_cast<std::int64_t>(r % span) - bound;
}

// Uniform on the open interval (0, 1): 53 random bits, shifted half a step.
double uniform_open(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

std::mt19937_64 generator_for(std::uint64_t seed, int n) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffU),
                    static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(n)};
  return std::mt19937_64(seq);
}

int minimum_n(TheoremId id) { return domain_of(id) == Domain::angular ? 1 : 0; }

double to_double(const BigInt& v) { return v.convert_to<double>(); }

double relative_residual(double lhs, double rhs) {
  const double err = std::fabs(lhs - rhs) / std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
  return std::isnan(err) ? std::numeric_limits<double>::infinity() : err;
}

CheckResult compare_exact(BigInt lhs, BigInt rhs) {
  CheckResult r;
  r.pass = lhs == rhs;
  if (!r.pass) {
    const double diff = to_double(BigInt(abs(lhs - rhs)));
    const double scale = std::max({std::fabs(to_double(lhs)), std::fabs(to_double(rhs)), 1.0});
    // A nonzero exact residual must never look like zero.
    r.rel_err = std::max(diff / scale, std::numeric_limits<double>::min());
  }
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

CheckResult compare_float(double lhs, double rhs, double tolerance) {
  CheckResult r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.rel_err = relative_residual(lhs, rhs);
  r.pass = r.rel_err <= tolerance;
  return r;
}

template <class T>
const T& input_as(const Sample& sample, TheoremId theorem) {
  if (const T* p = std::get_if<T>(&sample.input)) return *p;
  throw std::invalid_argument("sample input does not match theorem " +
                              std::string(name(theorem)));
}

// Per-n partial report, reduced in n order.
struct Partial {
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  std::optional<WorstCase> worst;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;
};

Partial run_n(const SamplePlan& plan, int n) {
  Partial part;
  for (Sample& sample : draw_samples_for_n(plan, n)) {
    if (sample.skipped) {
      ++part.skipped;
      continue;
    }
    CheckResult result;
    try {
      result = check_identity(plan.theorem, sample, plan.tolerance, plan.pole_guard);
    } catch (const PoleError&) {
      ++part.skipped;
      continue;
    } catch (const std::exception&) {
      // Overflow or domain failure on an accepted sample counts against the identity.
      const double nan = std::numeric_limits<double>::quiet_NaN();
      result = CheckResult{nan, nan, std::numeric_limits<double>::infinity(), false};
    }
    ++part.evaluated;
    if (!part.worst || result.rel_err > part.worst->rel_err)
      part.worst = WorstCase{sample, result.rel_err};
    if (!result.pass) {
      ++part.failure_count;
      if (part.failures.size() < kMaxRecordedFailures)
        part.failures.push_back(
            Failure{std::move(sample), std::move(result.lhs), std::move(result.rhs), result.rel_err});
    }
  }
  return part;
}

}  // namespace

std::span<const TheoremId> all_theorems() { return kTheorems; }

std::string_view name(TheoremId id) { return kNames.at(static_cast<std::size_t>(id)); }

std::optional<TheoremId> parse_theorem(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == text) return kTheorems[i];
  return std::nullopt;
}

Domain domain_of(TheoremId id) {
  switch (id) {
    case TheoremId::t2_1_cos:
    case TheoremId::t2_1_sin:
    case TheoremId::t2_1_pyth:
      return Domain::lattice;
    case TheoremId::c2_1_cos:
    case TheoremId::c2_1_sin:
      return Domain::index;
    case TheoremId::t2_2:
      return Domain::factors;
    case TheoremId::l2_1:
    case TheoremId::t2_3:
    case TheoremId::t2_4:
    case TheoremId::t2_5:
    case TheoremId::t2_6:
      return Domain::angular;
  }
  throw std::invalid_argument("unknown theorem id");
}

bool is_exact(TheoremId id) {
  const Domain d = domain_of(id);
  return d == Domain::lattice || d == Domain::index;
}

void validate(const SamplePlan& plan) {
  if (plan.n_range.lo > plan.n_range.hi) throw std::invalid_argument("n range is empty");
  if (plan.n_range.lo < minimum_n(plan.theorem))
    throw std::invalid_argument(std::string(name(plan.theorem)) + " requires n >= " +
                                std::to_string(minimum_n(plan.theorem)));
  if (plan.samples_per_n < 1) throw std::invalid_argument("samples per n must be >= 1");
  if (!(plan.pole_guard > 0.0)) throw std::invalid_argument("pole guard must be > 0");
  if (!(plan.tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  if (!(plan.angle_interval.lo < plan.angle_interval.hi) ||
      !std::isfinite(plan.angle_interval.lo) || !std::isfinite(plan.angle_interval.hi))
    throw std::invalid_argument("angle interval must be a finite, nonempty interval");
}

double pole_distance(TheoremId theorem, int n, Angle x) {
  const double t = x.radians;
  switch (theorem) {
    case TheoremId::l2_1:
    case TheoremId::t2_3:
      return two_pi_multiple_distance(t);
    case TheoremId::t2_4: {
      double d = std::min(pi_multiple_distance(t), lattice_distance(t, 0.0, std::ldexp(kPi, n)));
      for (int k = 1; k <= n; ++k) {
        const double scale = std::ldexp(1.0, k);
        d = std::min(d, lattice_distance(t, scale * kPi / 2, scale * kPi));
      }
      return d;
    }
    case TheoremId::t2_5:
    case TheoremId::t2_6: {
      double d = pi_multiple_distance(t);
      for (int k = 1; k <= n + 1; ++k)
        d = std::min(d, tan_pole_distance(static_cast<double>(k) * t));
      return d;
    }
    default:
      throw std::invalid_argument(std::string(name(theorem)) + " has no angular domain");
  }
}

std::vector<Sample> draw_samples_for_n(const SamplePlan& plan, int n) {
  std::mt19937_64 rng = generator_for(plan.seed, n);
  std::vector<Sample> samples;
  const Domain domain = domain_of(plan.theorem);
  const std::size_t count = domain == Domain::index ? 1 : static_cast<std::size_t>(plan.samples_per_n);
  samples.reserve(count);

  for (std::size_t i = 0; i < count; ++i) {
    Sample s;
    s.n = n;
    s.index = i;
    switch (domain) {
      case Domain::angular: {
        const double width = plan.angle_interval.hi - plan.angle_interval.lo;
        const double x = plan.angle_interval.lo + width * uniform_open(rng);
        s.input = AngleInput{x};
        s.skipped = pole_distance(plan.theorem, n, Angle{x}) < plan.pole_guard;
        break;
      }
      case Domain::lattice: {
        LatticeInput p;
        do {
          p.x = uniform_int(rng, kLatticeBound);
          p.y = uniform_int(rng, kLatticeBound);
        } while (p.x == 0 && p.y == 0);
        s.input = p;
        break;
      }
      case Domain::index:
        s.input = IndexInput{};
        break;
      case Domain::factors: {
        FactorInput f;
        f.factors.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
          Factor factor;
          do {
            factor.x = uniform_int(rng, kLatticeBound);
          } while (factor.x == 0);
          factor.y = uniform_int(rng, kLatticeBound);
          f.factors.push_back(factor);
        }
        s.input = std::move(f);
        break;
      }
    }
    samples.push_back(std::move(s));
  }
  return samples;
}

std::vector<Sample> draw_samples(const SamplePlan& plan) {
  validate(plan);
  std::vector<Sample> all;
  for (int n = plan.n_range.lo; n <= plan.n_range.hi; ++n) {
    std::vector<Sample> part = draw_samples_for_n(plan, n);
    std::move(part.begin(), part.end(), std::back_inserter(all));
  }
  return all;
}

CheckResult check_identity(TheoremId theorem, const Sample& sample, double tolerance,
                           double pole_guard) {
  const int n = sample.n;
  const auto un = static_cast<std::uint64_t>(n);
  switch (theorem) {
    case TheoremId::t2_1_cos:
    case TheoremId::t2_1_sin:
    case TheoremId::t2_1_pyth: {
      const auto& p = input_as<LatticeInput>(sample, theorem);
      auto [even, odd] = binom_series_pair(p.x, p.y, un);
      if (theorem == TheoremId::t2_1_pyth) {
        BigInt lhs = even * even + odd * odd;
        BigInt rhs = boost::multiprecision::pow(BigInt(p.x * p.x + p.y * p.y), static_cast<unsigned>(n));
        return compare_exact(std::move(lhs), std::move(rhs));
      }
      GaussianInt power = gauss_pow(GaussianInt{p.x, p.y}, un);
      if (theorem == TheoremId::t2_1_cos) return compare_exact(std::move(even), std::move(power.re));
      return compare_exact(std::move(odd), std::move(power.im));
    }
    case TheoremId::c2_1_cos:
      return compare_exact(alt_binom_even(un), quarter_turn_exact(un).re);
    case TheoremId::c2_1_sin:
      return compare_exact(alt_binom_odd(un), quarter_turn_exact(un).im);
    case TheoremId::t2_2: {
      const auto& f = input_as<FactorInput>(sample, theorem);
      const CosSinPair closed = gauss_product_closed(f.factors, AxisPolicy::principal);
      GaussianInt exact = gauss_product(f.factors);
      const double scale = std::max(product_modulus(f.factors), 1.0);
      const double err = std::max(std::fabs(closed.cos_part - to_double(exact.re)),
                                  std::fabs(closed.sin_part - to_double(exact.im))) /
                         scale;
      CheckResult r;
      r.lhs = closed;
      r.rhs = std::move(exact);
      r.rel_err = std::isnan(err) ? std::numeric_limits<double>::infinity() : err;
      r.pass = r.rel_err <= tolerance;
      return r;
    }
    case TheoremId::l2_1:
    case TheoremId::t2_3:
    case TheoremId::t2_4:
    case TheoremId::t2_5:
    case TheoremId::t2_6: {
      const Angle x{input_as<AngleInput>(sample, theorem).x};
      switch (theorem) {
        case TheoremId::l2_1:
          return compare_float(cos_partial_sum(n, x), cos_partial_rhs(n, x, pole_guard), tolerance);
        case TheoremId::t2_3:
          return compare_float(sin_cos_square_sum(n, x), dirichlet_rhs(n, x, pole_guard), tolerance);
        case TheoremId::t2_4:
          return compare_float(tan_half_sum(n, x, pole_guard), tan_half_rhs(n, x, pole_guard),
                               tolerance);
        case TheoremId::t2_5:
          return compare_float(tan_pair_sum(n, x, pole_guard), tan_pair_rhs(n, x, pole_guard),
                               tolerance);
        default:
          return compare_float(tan_triple_sum(n, x, pole_guard), tan_triple_rhs(n, x, pole_guard),
                               tolerance);
      }
    }
  }
  throw std::invalid_argument("unknown theorem id");
}

IdentityReport sweep(const SamplePlan& plan, unsigned threads) {
  validate(plan);
  const int lo = plan.n_range.lo;
  const auto count = static_cast<std::size_t>(plan.n_range.hi - lo + 1);
  std::vector<Partial> parts(count);

  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::min<std::size_t>(count, 64)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) parts[i] = run_n(plan, lo + static_cast<int>(i));
  } else {
    // Strided assignment; each worker only writes its own slots.
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w)
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += threads) parts[i] = run_n(plan, lo + static_cast<int>(i));
      });
  }

  IdentityReport report;
  report.plan = plan;
  for (Partial& part : parts) {
    report.evaluated += part.evaluated;
    report.skipped_near_pole += part.skipped;
    if (part.worst && (!report.worst_case || part.worst->rel_err > report.worst_case->rel_err))
      report.worst_case = std::move(part.worst);
    report.failure_count += part.failure_count;
    for (Failure& f : part.failures) {
      if (report.failures.size() == kMaxRecordedFailures) break;
      report.failures.push_back(std::move(f));
    }
  }
  if (report.worst_case) report.max_rel_err = report.worst_case->rel_err;
  report.vacuous = report.evaluated == 0;
  report.pass = report.failure_count == 0;
  return report;
}

}  // namespace trigseries::verify
