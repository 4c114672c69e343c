#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "trigseries/errors.hpp"
#include "trigseries/exact_core.hpp"

using namespace trigseries;

TEST_CASE("binomial small values and edge cases") {
  CHECK(binomial(3, 2) == 3);
  CHECK(binomial(0, 0) == 1);
  for (std::uint64_t n : {0u, 1u, 7u, 100u}) CHECK(binomial(n, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(0, 1) == 0);
}

TEST_CASE("binomial agrees with Pascal recurrence") {
  const auto row = oracle::pascal_row(64);
  CHECK(binomial(64, 32) == row[32]);
  CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
  for (std::uint64_t k = 0; k <= 64; ++k) CHECK(binomial(64, k) == row[k]);

  const auto big = oracle::pascal_row(300);
  for (std::uint64_t k : {0u, 1u, 17u, 150u, 299u, 300u}) CHECK(binomial(300, k) == big[k]);
}

TEST_CASE("gauss_mul worked products") {
  CHECK(gauss_mul({1, 1}, {2, 1}) == GaussianInt{1, 3});
  CHECK(gauss_mul({0, 1}, {0, 1}) == GaussianInt{-1, 0});
  const GaussianInt z{-7, 12};
  CHECK(gauss_mul(z, GaussianInt::one()) == z);
  CHECK(z * GaussianInt{1, 0} == z);
}

TEST_CASE("gauss_pow worked powers") {
  CHECK(gauss_pow({1, 1}, 3) == GaussianInt{-2, 2});
  CHECK(gauss_pow({2, 1}, 2) == GaussianInt{3, 4});
  CHECK(gauss_pow({5, -3}, 0) == GaussianInt{1, 0});
  CHECK(gauss_pow({0, 0}, 0) == GaussianInt{1, 0});
  CHECK(gauss_pow({0, 0}, 3) == GaussianInt{0, 0});
}

TEST_CASE("gauss_product worked lists") {
  const FactorList three{{1, 1}, {2, 1}, {3, 1}};
  CHECK(gauss_product(three) == GaussianInt{0, 10});
  CHECK(gauss_product(FactorList{{3, 4}}) == GaussianInt{3, 4});
  CHECK(gauss_product(FactorList{}) == GaussianInt{1, 0});
  CHECK(gauss_product(FactorList{{1, 1}, {1, -1}}) == GaussianInt{2, 0});
}

TEST_CASE("alternating binomial sums") {
  CHECK(alt_binom_even(3) == -2);
  CHECK(alt_binom_odd(3) == 2);
  CHECK(alt_binom_even(0) == 1);
  CHECK(alt_binom_odd(0) == 0);
  CHECK(alt_binom_even(4) == -4);
  CHECK(alt_binom_odd(5) == -4);
  CHECK(alt_binom_even(4) == gauss_pow({1, 1}, 4).re);
  CHECK(alt_binom_odd(5) == gauss_pow({1, 1}, 5).im);
}

TEST_CASE("tan_quarter values") {
  CHECK(tan_quarter(3) == ExtendedRational::make(-1, 1));
  CHECK(tan_quarter(3).to_string() == "-1");
  CHECK(tan_quarter(0) == ExtendedRational::make(0, 1));
  CHECK(tan_quarter(2).is_infinite());
  CHECK(tan_quarter(2).to_string() == "inf");
}

TEST_CASE("ExtendedRational normalisation") {
  const auto r = ExtendedRational::make(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(ExtendedRational::make(0, -5) == ExtendedRational::make(0, 1));
  CHECK(ExtendedRational::make(7, 0) == ExtendedRational::infinity());
  CHECK(ExtendedRational::make(-7, 0) == ExtendedRational::infinity());
  CHECK_FALSE(ExtendedRational::infinity() == ExtendedRational::make(1, 1));
  CHECK_THROWS_AS(ExtendedRational::make(0, 0), InternalError);
}

TEST_CASE("property: norm is multiplicative") {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<std::int64_t> coord(-1'000'000, 1'000'000);
  for (int i = 0; i < 2000; ++i) {
    const GaussianInt a{coord(rng), coord(rng)};
    const GaussianInt b{coord(rng), coord(rng)};
    CHECK(gauss_mul(a, b).norm() == a.norm() * b.norm());
  }
}

TEST_CASE("property: binary power equals the repeated product") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-50, 50);
  std::uniform_int_distribution<std::uint64_t> expo(0, 64);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t x = coord(rng);
    const std::int64_t y = coord(rng);
    const std::uint64_t n = expo(rng);
    const auto [re, im] = oracle::repeated_power(x, y, n);
    const GaussianInt p = gauss_pow({x, y}, n);
    CHECK(p.re == re);
    CHECK(p.im == im);
  }
}

TEST_CASE("property: alternating sums against (1+i)^n and 2^n") {
  for (std::uint64_t n = 0; n <= 256; ++n) {
    const BigInt even = alt_binom_even(n);
    const BigInt odd = alt_binom_odd(n);
    CHECK(even * even + odd * odd == BigInt(1) << static_cast<unsigned>(n));
    const GaussianInt p = gauss_pow({1, 1}, n);
    CHECK(even == p.re);
    CHECK(odd == p.im);
  }
}

TEST_CASE("property: tan_quarter cycles 0, 1, inf, -1") {
  const ExtendedRational cycle[4] = {ExtendedRational::make(0, 1), ExtendedRational::make(1, 1),
                                     ExtendedRational::infinity(), ExtendedRational::make(-1, 1)};
  for (std::uint64_t n = 0; n <= 64; ++n) {
    const ExtendedRational t = tan_quarter(n);
    CHECK(t == cycle[n % 4]);
    if (!t.is_infinite()) {
      CHECK(t.den() > 0);
      CHECK(boost::multiprecision::gcd(abs(t.num()), t.den()) == 1);
    }
  }
}
