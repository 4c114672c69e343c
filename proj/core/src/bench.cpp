#include "trigseries/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "trigseries/closed_form.hpp"
#include "trigseries/errors.hpp"
#include "trigseries/series_oracle.hpp"

namespace trigseries::bench {

using verify::TheoremId;

namespace {

using Clock = std::chrono::steady_clock;

template <class T>
void do_not_optimize(const T& value) {
#if defined(__GNUC__) || defined(__clang__)
  asm volatile("" : : "r"(&value) : "memory");
#else
  static volatile const void* sink;
  sink = &value;
#endif
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2;
}

template <class F>
std::vector<double> time_reps(int reps, F&& f) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    auto value = f();
    const auto stop = Clock::now();
    do_not_optimize(value);
    out.push_back(std::chrono::duration<double>(stop - start).count());
  }
  return out;
}

struct Evaluators {
  std::function<void()> naive;
  std::function<void()> closed;
};

// Wraps a value-returning callable as a timed void() that keeps the value alive.
template <class F>
std::function<void()> keep(F f) {
  return [f] {
    auto value = f();
    do_not_optimize(value);
  };
}

Evaluators evaluators_for(TheoremId theorem, int n, const verify::SampleInput& input) {
  const auto un = static_cast<std::uint64_t>(n);
  if (const auto* p = std::get_if<verify::LatticeInput>(&input)) {
    const std::int64_t x = p->x;
    const std::int64_t y = p->y;
    switch (theorem) {
      case TheoremId::t2_1_cos:
      case TheoremId::t2_1_sin:
        return {keep([=] { return binom_series_pair(x, y, un); }),
                keep([=] { return gauss_pow(GaussianInt{x, y}, un); })};
      case TheoremId::t2_1_pyth:
        return {keep([=] {
                  auto [c, s] = binom_series_pair(x, y, un);
                  return BigInt(c * c + s * s);
                }),
                keep([=] {
                  return BigInt(boost::multiprecision::pow(BigInt(x * x + y * y),
                                                           static_cast<unsigned>(n)));
                })};
      default:
        break;
    }
  } else if (std::holds_alternative<verify::IndexInput>(input)) {
    if (theorem == TheoremId::c2_1_cos)
      return {keep([=] { return alt_binom_even(un); }),
              keep([=] { return quarter_turn_exact(un).re; })};
    if (theorem == TheoremId::c2_1_sin)
      return {keep([=] { return alt_binom_odd(un); }),
              keep([=] { return quarter_turn_exact(un).im; })};
  } else if (const auto* f = std::get_if<verify::FactorInput>(&input)) {
    if (theorem == TheoremId::t2_2) {
      FactorList factors = f->factors;
      return {keep([factors] { return gauss_product(factors); }),
              keep([factors] { return gauss_product_closed(factors, AxisPolicy::principal); })};
    }
  } else if (const auto* a = std::get_if<verify::AngleInput>(&input)) {
    const Angle x{a->x};
    switch (theorem) {
      case TheoremId::l2_1:
        return {keep([=] { return cos_partial_sum(n, x); }),
                keep([=] { return cos_partial_rhs(n, x); })};
      case TheoremId::t2_3:
        return {keep([=] { return sin_cos_square_sum(n, x); }),
                keep([=] { return dirichlet_rhs(n, x); })};
      case TheoremId::t2_4:
        return {keep([=] { return tan_half_sum(n, x); }), keep([=] { return tan_half_rhs(n, x); })};
      case TheoremId::t2_5:
        return {keep([=] { return tan_pair_sum(n, x); }), keep([=] { return tan_pair_rhs(n, x); })};
      case TheoremId::t2_6:
        return {keep([=] { return tan_triple_sum(n, x); }),
                keep([=] { return tan_triple_rhs(n, x); })};
      default:
        break;
    }
  }
  throw std::invalid_argument("bench input does not match theorem " +
                              std::string(verify::name(theorem)));
}

}  // namespace

double timer_resolution() {
  static const double resolution = [] {
    double best = 1.0;
    for (int i = 0; i < 1000; ++i) {
      const auto a = Clock::now();
      auto b = Clock::now();
      while (b == a) b = Clock::now();
      best = std::min(best, std::chrono::duration<double>(b - a).count());
    }
    return best;
  }();
  return resolution;
}

BenchRecord time_pair(TheoremId theorem, int n, const verify::SampleInput& input, int reps,
                      double pole_guard, double tolerance) {
  if (reps < kMinReps)
    throw std::invalid_argument("reps must be >= " + std::to_string(kMinReps));
  if (n < (verify::domain_of(theorem) == verify::Domain::angular ? 1 : 0))
    throw std::invalid_argument("n is below the theorem's minimum");
  if (const auto* f = std::get_if<verify::FactorInput>(&input);
      f && f->factors.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("factor list length must equal n");

  const Evaluators eval = evaluators_for(theorem, n, input);

  // Residual first, outside the timed region. The guarded evaluation also
  // rejects inputs inside the pole guard.
  verify::Sample sample;
  sample.n = n;
  sample.input = input;
  const verify::CheckResult check = verify::check_identity(theorem, sample, tolerance, pole_guard);

  BenchRecord rec;
  rec.theorem = theorem;
  rec.n = n;
  rec.input = input;
  rec.reps = reps;
  rec.tolerance = tolerance;
  rec.residual = check.rel_err;
  rec.residual_ok = check.pass;
  rec.naive_samples = time_reps(reps, [&] {
    eval.naive();
    return 0;
  });
  rec.closed_samples = time_reps(reps, [&] {
    eval.closed();
    return 0;
  });
  rec.naive_time = median(rec.naive_samples);
  rec.closed_time = median(rec.closed_samples);
  // A zero median means the evaluation finished inside one clock step.
  const double tick = timer_resolution();
  rec.speedup = rec.naive_time / std::max(rec.closed_time, tick);
  rec.below_timer_resolution =
      rec.naive_time < 100 * tick || rec.closed_time < 100 * tick;
  return rec;
}

}  // namespace trigseries::bench
