#pragma once

#include <numbers>

namespace trigseries {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default pole guard in radians.
inline constexpr double kDefaultPoleGuard = 1e-4;

/// Free angular variable, in radians.
struct Angle {
  double radians = 0.0;

  constexpr Angle() = default;
  explicit constexpr Angle(double r) : radians(r) {}

  friend constexpr bool operator==(Angle, Angle) = default;
};

/// Distance from `arg` to the nearest point of offset + period*Z.
double lattice_distance(double arg, double offset, double period);

/// Distance to the nearest pole of tan (pi/2 + pi*Z).
inline double tan_pole_distance(double arg) { return lattice_distance(arg, kPi / 2, kPi); }

/// Distance to the nearest multiple of pi: poles of cot, zeros of tan and sin.
inline double pi_multiple_distance(double arg) { return lattice_distance(arg, 0.0, kPi); }

/// Distance to the nearest multiple of 2*pi: zeros of 1 - cos.
inline double two_pi_multiple_distance(double arg) { return lattice_distance(arg, 0.0, kTwoPi); }

/// Throws PoleError when `distance < guard`, or when the argument sits
/// exactly on the pole (a zero guard still rejects exact hits).
void require_clear_of_pole(double distance, double guard, const char* term, int multiple);

}  // namespace trigseries
