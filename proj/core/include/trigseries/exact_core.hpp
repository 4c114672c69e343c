#pragma once

// Exact integer, rational and Gaussian-integer arithmetic.
//
// Every identity that is an integer claim (the binomial expansions of
// (x+iy)^n, the alternating binomial sums at x = y = 1, integrality of
// Gaussian products) is checked through these types and never through
// floating point.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trigseries {

using BigInt = boost::multiprecision::cpp_int;

/// x + iy with arbitrary-precision components.
struct GaussianInt {
  BigInt re{0};
  BigInt im{0};

  GaussianInt() = default;
  GaussianInt(BigInt real, BigInt imag) : re(std::move(real)), im(std::move(imag)) {}

  static GaussianInt one() { return {1, 0}; }

  /// re^2 + im^2.
  BigInt norm() const { return re * re + im * im; }

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);

std::string to_string(const GaussianInt& z);

/// One factor x_k + i*y_k of a Gaussian product.
struct Factor {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

using FactorList = std::vector<Factor>;

/// Rational number in lowest terms, or the single projective point at
/// infinity. Finite values always have den > 0 and gcd(|num|, den) = 1.
class ExtendedRational {
 public:
  /// Reduces num/den. A zero denominator yields infinity when num != 0 and
  /// throws InternalError for 0/0.
  static ExtendedRational make(BigInt num, BigInt den);
  static ExtendedRational infinity();

  bool is_infinite() const noexcept { return infinite_; }
  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  /// "p/q", "p" when q == 1, or "inf".
  std::string to_string() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);

 private:
  ExtendedRational() = default;

  BigInt num_{0};
  BigInt den_{1};
  bool infinite_ = false;
};

/// C(n, k), exact; zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

GaussianInt gauss_mul(const GaussianInt& a, const GaussianInt& b);

/// z^n by binary exponentiation; z^0 = 1.
GaussianInt gauss_pow(const GaussianInt& z, std::uint64_t n);

/// Left-to-right product of x_k + i*y_k; the empty product is 1.
GaussianInt gauss_product(std::span<const Factor> factors);

/// sum over 2k <= n of (-1)^k C(n, 2k), the real part of (1+i)^n.
BigInt alt_binom_even(std::uint64_t n);

/// sum over 2k < n of (-1)^k C(n, 2k+1), the imaginary part of (1+i)^n.
BigInt alt_binom_odd(std::uint64_t n);

/// tan(n*pi/4) as alt_binom_odd(n) / alt_binom_even(n); infinity when the
/// even sum vanishes (n = 2 mod 4).
ExtendedRational tan_quarter(std::uint64_t n);

}  // namespace trigseries
