#include "trigseries/series_oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "trigseries/errors.hpp"

namespace trigseries {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": n must be >= 1");
}

// tan(kx) after checking kx against the guard.
double guarded_tan(int k, double x, double pole_guard) {
  const double arg = static_cast<double>(k) * x;
  require_clear_of_pole(tan_pole_distance(arg), pole_guard, "tan", k);
  return std::tan(arg);
}

}  // namespace

std::pair<BigInt, BigInt> binom_series_pair(std::int64_t x, std::int64_t y, std::uint64_t n) {
  std::vector<BigInt> x_pow(n + 1);
  std::vector<BigInt> y_pow(n + 1);
  x_pow[0] = 1;
  y_pow[0] = 1;
  for (std::uint64_t j = 1; j <= n; ++j) {
    x_pow[j] = x_pow[j - 1] * x;
    y_pow[j] = y_pow[j - 1] * y;
  }

  BigInt even = 0;
  BigInt odd = 0;
  for (std::uint64_t k = 0; 2 * k <= n; ++k) {
    BigInt term = binomial(n, 2 * k) * x_pow[n - 2 * k] * y_pow[2 * k];
    if (k & 1U)
      even -= term;
    else
      even += term;
  }
  for (std::uint64_t k = 0; 2 * k < n; ++k) {
    BigInt term = binomial(n, 2 * k + 1) * x_pow[n - 2 * k - 1] * y_pow[2 * k + 1];
    if (k & 1U)
      odd -= term;
    else
      odd += term;
  }
  return {std::move(even), std::move(odd)};
}

double sin_cos_square_sum(int n, Angle x) {
  require_positive(n, "sin_cos_square_sum");
  double sin_sum = 0.0;
  double cos_sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double arg = static_cast<double>(k) * x.radians;
    sin_sum += std::sin(arg);
    cos_sum += std::cos(arg);
  }
  return sin_sum * sin_sum + cos_sum * cos_sum;
}

double cos_partial_sum(int m, Angle x) {
  require_positive(m, "cos_partial_sum");
  double sum = 0.0;
  for (int k = 1; k <= m; ++k) sum += std::cos(static_cast<double>(k) * x.radians);
  return 1.0 + 2.0 * sum;
}

double tan_half_sum(int n, Angle x, double pole_guard) {
  require_positive(n, "tan_half_sum");
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    // tan(x/2^k) is singular at x = 2^k (pi/2 + m pi); measured in units of x.
    const double scale = std::ldexp(1.0, k);
    require_clear_of_pole(lattice_distance(x.radians, scale * kPi / 2, scale * kPi), pole_guard,
                          "tan", -k);
    sum += std::ldexp(std::tan(std::ldexp(x.radians, -k)), -k);
  }
  return sum;
}

double tan_pair_sum(int n, Angle x, double pole_guard) {
  require_positive(n, "tan_pair_sum");
  double sum = 0.0;
  double current = guarded_tan(1, x.radians, pole_guard);
  for (int k = 1; k <= n; ++k) {
    const double next = guarded_tan(k + 1, x.radians, pole_guard);
    sum += current * next;
    current = next;
  }
  return sum;
}

double tan_triple_sum(int n, Angle x, double pole_guard) {
  require_positive(n, "tan_triple_sum");
  double sum = 0.0;
  double previous = 0.0;  // tan(0x)
  double current = guarded_tan(1, x.radians, pole_guard);
  for (int k = 1; k <= n; ++k) {
    const double next = guarded_tan(k + 1, x.radians, pole_guard);
    sum += current * (previous + next);
    previous = current;
    current = next;
  }
  return sum;
}

double tan_partial_sum(int n, Angle x, double pole_guard) {
  if (n < 0) throw DomainError("tan_partial_sum: n must be >= 0");
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) sum += guarded_tan(k, x.radians, pole_guard);
  return sum;
}

}  // namespace trigseries
