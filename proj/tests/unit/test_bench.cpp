#include <doctest.h>

#include <stdexcept>

#include "trigseries/bench.hpp"
#include "trigseries/errors.hpp"

using namespace trigseries;
using verify::TheoremId;

TEST_CASE("time_pair records medians, raw timings and residual") {
  const auto rec = bench::time_pair(TheoremId::t2_4, 30, verify::AngleInput{1.0}, 5);
  CHECK(rec.reps == 5);
  CHECK(rec.naive_samples.size() == 5);
  CHECK(rec.closed_samples.size() == 5);
  CHECK(rec.residual <= 1e-10);
  CHECK(rec.residual_ok);
  CHECK(rec.naive_time >= 0.0);
  CHECK(rec.speedup > 0.0);
}

TEST_CASE("time_pair on the exact De Moivre path") {
  const auto rec = bench::time_pair(TheoremId::t2_1_cos, 1024, verify::LatticeInput{2, 1}, 5);
  CHECK(rec.residual == 0.0);
  CHECK(rec.residual_ok);
  // O(log n) multiplications against n+1 binomial terms.
  CHECK(rec.closed_time < rec.naive_time);
}

TEST_CASE("time_pair for index and factor theorems") {
  CHECK(bench::time_pair(TheoremId::c2_1_sin, 512, verify::IndexInput{}, 3).residual == 0.0);
  const verify::FactorInput f{{{1, 1}, {2, 1}, {3, 1}}};
  const auto rec = bench::time_pair(TheoremId::t2_2, 3, f, 3);
  CHECK(rec.residual_ok);
  CHECK_THROWS_AS(bench::time_pair(TheoremId::t2_2, 4, f, 3), std::invalid_argument);
}

TEST_CASE("time_pair preconditions") {
  CHECK_THROWS_AS(bench::time_pair(TheoremId::t2_3, 10, verify::AngleInput{1.0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(bench::time_pair(TheoremId::t2_5, 4, verify::AngleInput{0.7853981}, 5), PoleError);
  CHECK_THROWS_AS(bench::time_pair(TheoremId::t2_3, 10, verify::LatticeInput{1, 1}, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(bench::time_pair(TheoremId::t2_3, 0, verify::AngleInput{1.0}, 5), std::invalid_argument);
}

TEST_CASE("timer resolution is positive and small") {
  const double tick = bench::timer_resolution();
  CHECK(tick > 0.0);
  CHECK(tick < 1e-3);
}
