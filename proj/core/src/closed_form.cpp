#include "trigseries/closed_form.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "trigseries/errors.hpp"

namespace trigseries {

namespace {

const double kMaxLog = std::log(std::numeric_limits<double>::max());

double checked_exp(double log_magnitude, const char* what) {
  if (log_magnitude > kMaxLog)
    throw OverflowError(std::string(what) + ": magnitude exceeds the double range");
  return std::exp(log_magnitude);
}

void require_positive(int n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": n must be >= 1");
}

}  // namespace

CosSinPair demoivre_closed(double x, double y, std::uint64_t n) {
  if (x == 0.0 && y == 0.0) throw DomainError("demoivre_closed: argument undefined at the origin");
  const double nd = static_cast<double>(n);
  const double magnitude = checked_exp(nd * std::log(std::hypot(x, y)), "demoivre_closed");
  const double angle = nd * std::atan2(y, x);
  return {magnitude * std::cos(angle), magnitude * std::sin(angle)};
}

double sum_squares_closed(double x, double y, std::uint64_t n) {
  if (x == 0.0 && y == 0.0) throw DomainError("sum_squares_closed: undefined at the origin");
  return checked_exp(2.0 * static_cast<double>(n) * std::log(std::hypot(x, y)),
                     "sum_squares_closed");
}

GaussianInt quarter_turn_exact(std::uint64_t n) {
  // Signs of (cos, sin) at the eight multiples of pi/4; odd multiples carry
  // a factor 1/sqrt(2) that cancels one power of sqrt(2).
  static constexpr int kCos[8] = {1, 1, 0, -1, -1, -1, 0, 1};
  static constexpr int kSin[8] = {0, 1, 1, 1, 0, -1, -1, -1};
  const unsigned r = static_cast<unsigned>(n % 8);
  const BigInt scale = BigInt(1) << static_cast<unsigned>(n / 2);
  return {scale * kCos[r], scale * kSin[r]};
}

double product_modulus(std::span<const Factor> factors) {
  double log_modulus = 0.0;
  for (const Factor& f : factors)
    log_modulus += std::log(std::hypot(static_cast<double>(f.x), static_cast<double>(f.y)));
  return checked_exp(log_modulus, "product_modulus");
}

CosSinPair gauss_product_closed(std::span<const Factor> factors, AxisPolicy policy) {
  double log_modulus = 0.0;
  double angle = 0.0;
  for (const Factor& f : factors) {
    if (f.x == 0 && f.y == 0) throw DomainError("gauss_product_closed: zero factor (0, 0)");
    if (f.x == 0 && policy == AxisPolicy::reject)
      throw DomainError("gauss_product_closed: arctan(y/x) undefined for x = 0");
    const double x = static_cast<double>(f.x);
    const double y = static_cast<double>(f.y);
    log_modulus += std::log(std::hypot(x, y));
    angle += std::atan2(y, x);
  }
  const double modulus = checked_exp(log_modulus, "gauss_product_closed");
  return {modulus * std::cos(angle), modulus * std::sin(angle)};
}

double dirichlet_rhs(int n, Angle x, double pole_guard) {
  require_positive(n, "dirichlet_rhs");
  const double t = x.radians;
  require_clear_of_pole(two_pi_multiple_distance(t), pole_guard, "1-cos", 1);
  const double ratio = std::sin(n * t / 2) / std::sin(t / 2);
  return ratio * ratio;
}

double cos_partial_rhs(int m, Angle x, double pole_guard) {
  require_positive(m, "cos_partial_rhs");
  const double t = x.radians;
  require_clear_of_pole(two_pi_multiple_distance(t), pole_guard, "1-cos", 1);
  // cos mx - cos(m+1)x = 2 sin((2m+1)x/2) sin(x/2) and 1 - cos x = 2 sin^2(x/2)
  return std::sin((2.0 * m + 1.0) * t / 2) / std::sin(t / 2);
}

double tan_half_rhs(int n, Angle x, double pole_guard) {
  require_positive(n, "tan_half_rhs");
  const double t = x.radians;
  require_clear_of_pole(pi_multiple_distance(t), pole_guard, "cot", 1);
  require_clear_of_pole(lattice_distance(t, 0.0, std::ldexp(kPi, n)), pole_guard, "cot", -n);
  const double contracted = std::ldexp(t, -n);
  return std::ldexp(1.0 / std::tan(contracted), -n) - 1.0 / std::tan(t);
}

double tan_pair_rhs(int n, Angle x, double pole_guard) {
  require_positive(n, "tan_pair_rhs");
  const double t = x.radians;
  const double outer = (n + 1.0) * t;
  require_clear_of_pole(tan_pole_distance(t), pole_guard, "tan", 1);
  require_clear_of_pole(pi_multiple_distance(t), pole_guard, "1/tan", 1);
  require_clear_of_pole(tan_pole_distance(outer), pole_guard, "tan", n + 1);
  return -(n + 1.0) + std::tan(outer) / std::tan(t);
}

double tan_triple_rhs(int n, Angle x, double pole_guard) {
  require_positive(n, "tan_triple_rhs");
  const double t = x.radians;
  const double inner = static_cast<double>(n) * t;
  const double outer = (n + 1.0) * t;
  require_clear_of_pole(tan_pole_distance(t), pole_guard, "tan", 1);
  require_clear_of_pole(pi_multiple_distance(t), pole_guard, "1/tan", 1);
  require_clear_of_pole(tan_pole_distance(inner), pole_guard, "tan", n);
  require_clear_of_pole(tan_pole_distance(outer), pole_guard, "tan", n + 1);
  return (std::tan(inner) + std::tan(outer)) / std::tan(t) - 1.0 - 2.0 * n;
}

}  // namespace trigseries
