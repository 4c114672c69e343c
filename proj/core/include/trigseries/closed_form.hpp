#pragma once

// Closed-form (right-hand) sides of the finite series identities.
//
// Angular evaluators take an optional pole guard in radians. A zero guard
// rejects only exact pole hits; verification sweeps pass their own guard so
// that a sample accepted by verify::pole_distance is always evaluable here.
// Distances are measured on the argument of the singular term (kx for
// tan(kx)); contracted arguments x/2^k are measured in units of x.

#include <cstdint>
#include <span>

#include "trigseries/angle.hpp"
#include "trigseries/exact_core.hpp"

namespace trigseries {

/// (modulus^n cos(n*theta), modulus^n sin(n*theta)) or the two parts of a
/// Gaussian product.
struct CosSinPair {
  double cos_part = 0.0;
  double sin_part = 0.0;
};

/// (x^2+y^2)^(n/2) * (cos(n*theta), sin(n*theta)) with theta = atan2(y, x).
///
/// The magnitude is evaluated in log space. Throws DomainError at the origin
/// and OverflowError when the magnitude exceeds the double range.
CosSinPair demoivre_closed(double x, double y, std::uint64_t n);

/// (x^2+y^2)^n, evaluated in log space. Errors as demoivre_closed.
double sum_squares_closed(double x, double y, std::uint64_t n);

/// 2^(n/2) * (cos(n*pi/4), sin(n*pi/4)) exactly, from the eighth-turn
/// periodicity of (1+i)^n. Both parts are integers for every n.
GaussianInt quarter_turn_exact(std::uint64_t n);

/// How gauss_product_closed treats factors on the imaginary axis (x_k = 0),
/// where arctan(y_k/x_k) does not exist.
enum class AxisPolicy {
  reject,     ///< DomainError on any x_k = 0
  principal,  ///< use the principal argument atan2(y_k, x_k) for those factors
};

/// (prod |z_k|) * (cos(sum arg z_k), sin(sum arg z_k)) with the modulus
/// accumulated in log space.
///
/// Arguments are principal arguments: arctan(y_k/x_k) is only the argument
/// of z_k for x_k > 0. Throws DomainError on a (0, 0) factor.
CosSinPair gauss_product_closed(std::span<const Factor> factors,
                                AxisPolicy policy = AxisPolicy::reject);

/// prod sqrt(x_k^2 + y_k^2) in double precision; 1 for an empty list.
double product_modulus(std::span<const Factor> factors);

/// (1 - cos nx)/(1 - cos x), evaluated as sin^2(nx/2)/sin^2(x/2).
double dirichlet_rhs(int n, Angle x, double pole_guard = 0.0);

/// (cos mx - cos(m+1)x)/(1 - cos x), evaluated as sin((2m+1)x/2)/sin(x/2).
double cos_partial_rhs(int m, Angle x, double pole_guard = 0.0);

/// (1/2^n) cot(x/2^n) - cot x.
double tan_half_rhs(int n, Angle x, double pole_guard = 0.0);

/// -(n+1) + tan((n+1)x)/tan x.
double tan_pair_rhs(int n, Angle x, double pole_guard = 0.0);

/// (tan nx + tan((n+1)x))/tan x - 1 - 2n.
double tan_triple_rhs(int n, Angle x, double pole_guard = 0.0);

}  // namespace trigseries
