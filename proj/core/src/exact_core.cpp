#include "trigseries/exact_core.hpp"

#include <algorithm>

#include "trigseries/errors.hpp"

namespace trigseries {

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) { return gauss_mul(a, b); }

std::string to_string(const GaussianInt& z) {
  return "(" + z.re.str() + ", " + z.im.str() + ")";
}

ExtendedRational ExtendedRational::make(BigInt num, BigInt den) {
  if (den == 0) {
    if (num == 0) throw InternalError("ExtendedRational: indeterminate 0/0");
    return infinity();
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const BigInt g = boost::multiprecision::gcd(abs(num), den);
  ExtendedRational r;
  r.num_ = num / g;
  r.den_ = den / g;
  return r;
}

ExtendedRational ExtendedRational::infinity() {
  ExtendedRational r;
  r.infinite_ = true;
  return r;
}

std::string ExtendedRational::to_string() const {
  if (infinite_) return "inf";
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // result stays C(n - k + i, i) after step i, so each division is exact.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

GaussianInt gauss_mul(const GaussianInt& a, const GaussianInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianInt gauss_pow(const GaussianInt& z, std::uint64_t n) {
  GaussianInt result = GaussianInt::one();
  GaussianInt base = z;
  while (n != 0) {
    if (n & 1U) result = gauss_mul(result, base);
    n >>= 1U;
    if (n != 0) base = gauss_mul(base, base);
  }
  return result;
}

GaussianInt gauss_product(std::span<const Factor> factors) {
  GaussianInt result = GaussianInt::one();
  for (const Factor& f : factors) result = gauss_mul(result, GaussianInt{f.x, f.y});
  return result;
}

namespace {

// Walks row n of Pascal's triangle once, splitting the alternating sum by
// the parity of the column.
struct AltBinomSums {
  BigInt even{0};
  BigInt odd{0};
};

AltBinomSums alt_binom_sums(std::uint64_t n) {
  AltBinomSums sums;
  BigInt c = 1;  // C(n, j)
  for (std::uint64_t j = 0; j <= n; ++j) {
    // (-1)^k with k = floor(j / 2)
    const bool negative = ((j / 2) & 1U) != 0;
    BigInt& target = (j & 1U) ? sums.odd : sums.even;
    if (negative)
      target -= c;
    else
      target += c;
    c *= n - j;
    c /= j + 1;
  }
  return sums;
}

}  // namespace

BigInt alt_binom_even(std::uint64_t n) { return alt_binom_sums(n).even; }

BigInt alt_binom_odd(std::uint64_t n) { return alt_binom_sums(n).odd; }

ExtendedRational tan_quarter(std::uint64_t n) {
  AltBinomSums sums = alt_binom_sums(n);
  if (sums.even == 0 && sums.odd == 0)
    throw InternalError("tan_quarter: both alternating sums vanish; their squares must sum to 2^n");
  return ExtendedRational::make(std::move(sums.odd), std::move(sums.even));
}

}  // namespace trigseries
