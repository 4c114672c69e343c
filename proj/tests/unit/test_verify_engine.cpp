#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "trigseries/errors.hpp"
#include "trigseries/series_oracle.hpp"
#include "trigseries/verify_engine.hpp"

using namespace trigseries;
using namespace trigseries::verify;

namespace {

constexpr double pi = std::numbers::pi;

SamplePlan angular_plan(TheoremId id, int lo, int hi, int samples, double guard) {
  SamplePlan p;
  p.theorem = id;
  p.n_range = {lo, hi};
  p.samples_per_n = samples;
  p.seed = 42;
  p.pole_guard = guard;
  p.tolerance = 1e-8;
  return p;
}

Sample angle_sample(int n, double x) {
  Sample s;
  s.n = n;
  s.input = AngleInput{x};
  return s;
}

}  // namespace

TEST_CASE("theorem names round-trip") {
  CHECK(all_theorems().size() == 11);
  for (TheoremId id : all_theorems()) CHECK(parse_theorem(name(id)) == id);
  CHECK_FALSE(parse_theorem("bogus").has_value());
  CHECK(is_exact(TheoremId::c2_1_cos));
  CHECK_FALSE(is_exact(TheoremId::t2_2));
  CHECK_FALSE(is_exact(TheoremId::t2_5));
}

TEST_CASE("pole_distance worked values") {
  for (int n : {1, 5, 30}) CHECK(pole_distance(TheoremId::t2_3, n, Angle{pi}) == doctest::Approx(pi));
  CHECK(pole_distance(TheoremId::t2_5, 1, Angle{pi / 4}) <= 1e-15);
  CHECK(pole_distance(TheoremId::t2_4, 2, Angle{0.1}) ==
        doctest::Approx(oracle::enumerated_pole_distance(TheoremId::t2_4, 2, 0.1)).epsilon(1e-12));
  CHECK(pole_distance(TheoremId::t2_4, 2, Angle{0.1}) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK_THROWS_AS(pole_distance(TheoremId::t2_1_cos, 2, Angle{0.1}), std::invalid_argument);
  CHECK_THROWS_AS(pole_distance(TheoremId::t2_2, 2, Angle{0.1}), std::invalid_argument);
}

TEST_CASE("property: pole_distance matches enumeration of the pole set") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 2 * pi);
  for (TheoremId id : {TheoremId::l2_1, TheoremId::t2_3, TheoremId::t2_4, TheoremId::t2_5, TheoremId::t2_6})
    for (int n : {1, 2, 3, 8, 17, 32})
      for (int i = 0; i < 200; ++i) {
        const double x = u(rng);
        const double expected = oracle::enumerated_pole_distance(id, n, x);
        CHECK(std::fabs(pole_distance(id, n, Angle{x}) - expected) <= 1e-12);
      }
}

TEST_CASE("property: evaluators accept exactly the samples pole_distance accepts") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 2 * pi);
  const double guard = 0.05;  // large, so both outcomes occur often
  for (TheoremId id : {TheoremId::l2_1, TheoremId::t2_3, TheoremId::t2_4, TheoremId::t2_5, TheoremId::t2_6})
    for (int n : {1, 3, 9})
      for (int i = 0; i < 300; ++i) {
        const double x = u(rng);
        const bool clear = pole_distance(id, n, Angle{x}) >= guard;
        bool evaluated = true;
        try {
          check_identity(id, angle_sample(n, x), 1e-8, guard);
        } catch (const PoleError&) {
          evaluated = false;
        }
        CHECK(evaluated == clear);
      }
}

TEST_CASE("check_identity worked cases") {
  Sample lattice;
  lattice.n = 2;
  lattice.input = LatticeInput{2, 1};
  const CheckResult c = check_identity(TheoremId::t2_1_cos, lattice, 1e-8);
  CHECK(c.pass);
  CHECK(c.rel_err == 0.0);
  CHECK(std::get<BigInt>(c.lhs) == 3);
  CHECK(std::get<BigInt>(c.rhs) == 3);

  const CheckResult t3 = check_identity(TheoremId::t2_3, angle_sample(1, 1.0), 1e-9);
  CHECK(t3.pass);
  CHECK(std::get<double>(t3.lhs) == doctest::Approx(1.0));
  CHECK(std::get<double>(t3.rhs) == doctest::Approx(1.0));

  const CheckResult t5 = check_identity(TheoremId::t2_5, angle_sample(1, pi / 6), 1e-9);
  CHECK(t5.pass);
  CHECK(std::get<double>(t5.lhs) == doctest::Approx(1.0));
  CHECK(std::get<double>(t5.rhs) == doctest::Approx(1.0));

  Sample product;
  product.n = 3;
  product.input = FactorInput{{{1, 1}, {2, 1}, {3, 1}}};
  const CheckResult t2 = check_identity(TheoremId::t2_2, product, 1e-8);
  CHECK(t2.pass);
  CHECK(std::get<GaussianInt>(t2.rhs) == GaussianInt{0, 10});

  CHECK_THROWS_AS(check_identity(TheoremId::t2_5, angle_sample(1, pi / 4), 1e-8, 1e-4), PoleError);
  CHECK_THROWS_AS(check_identity(TheoremId::t2_5, lattice, 1e-8), std::invalid_argument);
}

TEST_CASE("draw_samples is deterministic and respects the guard") {
  const SamplePlan plan = angular_plan(TheoremId::t2_3, 1, 6, 200, 1e-3);
  const auto a = draw_samples(plan);
  const auto b = draw_samples(plan);
  REQUIRE(a.size() == 1200);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double xa = std::get<AngleInput>(a[i].input).x;
    CHECK(xa == std::get<AngleInput>(b[i].input).x);
    CHECK(a[i].skipped == b[i].skipped);
    CHECK(xa > 0.0);
    CHECK(xa < 2 * pi);
    if (!a[i].skipped) {
      CHECK(xa >= 1e-3);
      CHECK(xa <= 2 * pi - 1e-3);
    }
  }

  SamplePlan other = plan;
  other.seed = 43;
  CHECK(std::get<AngleInput>(draw_samples(other)[0].input).x != std::get<AngleInput>(a[0].input).x);
}

TEST_CASE("skipped count matches an independent re-filter") {
  const SamplePlan plan = angular_plan(TheoremId::t2_5, 8, 8, 1000, 1e-2);
  const auto samples = draw_samples(plan);
  std::size_t marked = 0;
  std::size_t refiltered = 0;
  for (const Sample& s : samples) {
    marked += s.skipped;
    refiltered += oracle::enumerated_pole_distance(TheoremId::t2_5, 8, std::get<AngleInput>(s.input).x) < 1e-2;
  }
  CHECK(marked == refiltered);
  CHECK(marked > 0);
  const IdentityReport r = sweep(plan);
  CHECK(r.skipped_near_pole == marked);
  CHECK(r.evaluated + r.skipped_near_pole == samples.size());
}

TEST_CASE("integer draws stay inside the documented box") {
  SamplePlan lattice;
  lattice.theorem = TheoremId::t2_1_sin;
  lattice.n_range = {0, 4};
  lattice.samples_per_n = 500;
  for (const Sample& s : draw_samples(lattice)) {
    const auto& p = std::get<LatticeInput>(s.input);
    CHECK(std::abs(p.x) <= 9);
    CHECK(std::abs(p.y) <= 9);
    CHECK_FALSE((p.x == 0 && p.y == 0));
  }
  SamplePlan factors = lattice;
  factors.theorem = TheoremId::t2_2;
  factors.samples_per_n = 20;
  for (const Sample& s : draw_samples(factors)) {
    const auto& f = std::get<FactorInput>(s.input).factors;
    CHECK(f.size() == static_cast<std::size_t>(s.n));
    for (const Factor& k : f) {
      CHECK(k.x != 0);
      CHECK(std::abs(k.x) <= 9);
      CHECK(std::abs(k.y) <= 9);
    }
  }
  SamplePlan index = lattice;
  index.theorem = TheoremId::c2_1_cos;
  CHECK(draw_samples(index).size() == 5);
}

TEST_CASE("plan validation") {
  SamplePlan p = angular_plan(TheoremId::t2_3, 1, 4, 10, 1e-3);
  CHECK_NOTHROW(validate(p));
  SamplePlan bad = p;
  bad.n_range = {5, 4};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = p;
  bad.n_range = {0, 4};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = p;
  bad.pole_guard = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = p;
  bad.tolerance = -1.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = p;
  bad.samples_per_n = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = p;
  bad.theorem = TheoremId::c2_1_cos;
  bad.n_range = {0, 3};
  CHECK_NOTHROW(validate(bad));
}

TEST_CASE("sweep: exact theorems report zero residual") {
  for (TheoremId id : {TheoremId::t2_1_cos, TheoremId::t2_1_sin, TheoremId::t2_1_pyth,
                       TheoremId::c2_1_cos, TheoremId::c2_1_sin}) {
    SamplePlan p;
    p.theorem = id;
    p.n_range = {0, is_exact(id) && domain_of(id) == Domain::index ? 256 : 12};
    p.samples_per_n = 40;
    const IdentityReport r = sweep(p);
    CHECK(r.pass);
    CHECK(r.max_rel_err == 0.0);
    CHECK(r.failure_count == 0);
    CHECK(r.evaluated > 0);
  }
}

TEST_CASE("sweep: vacuous plan passes with the warning flag") {
  SamplePlan p = angular_plan(TheoremId::t2_3, 1, 3, 50, 1e-2);
  p.angle_interval = {-1e-3, 1e-3};
  const IdentityReport r = sweep(p);
  CHECK(r.evaluated == 0);
  CHECK(r.skipped_near_pole == 150);
  CHECK(r.pass);
  CHECK(r.vacuous);
  CHECK_FALSE(r.worst_case.has_value());
}

TEST_CASE("sweep: a too-tight tolerance produces recorded failures") {
  SamplePlan p = angular_plan(TheoremId::t2_5, 1, 32, 100, 1e-3);
  p.tolerance = 1e-300;
  const IdentityReport r = sweep(p);
  CHECK_FALSE(r.pass);
  CHECK(r.failure_count > kMaxRecordedFailures);
  CHECK(r.failures.size() == kMaxRecordedFailures);
  CHECK(r.failures.front().sample.n <= r.failures.back().sample.n);
}

TEST_CASE("sweep: report is independent of thread count") {
  const SamplePlan p = angular_plan(TheoremId::t2_6, 1, 12, 100, 1e-3);
  const IdentityReport one = sweep(p, 1);
  const IdentityReport four = sweep(p, 4);
  CHECK(one.evaluated == four.evaluated);
  CHECK(one.skipped_near_pole == four.skipped_near_pole);
  CHECK(one.max_rel_err == four.max_rel_err);
  REQUIRE(one.worst_case.has_value());
  CHECK(one.worst_case->sample.n == four.worst_case->sample.n);
  CHECK(one.worst_case->sample.index == four.worst_case->sample.index);
}

TEST_CASE("property: a larger guard never raises the maximum residual") {
  for (TheoremId id : {TheoremId::t2_3, TheoremId::t2_4, TheoremId::t2_5, TheoremId::t2_6}) {
    double previous = std::numeric_limits<double>::infinity();
    for (double guard : {1e-6, 1e-4, 1e-3, 1e-2, 1e-1}) {
      const IdentityReport r = sweep(angular_plan(id, 1, 16, 200, guard));
      CHECK(r.max_rel_err <= previous);
      previous = r.max_rel_err;
    }
  }
}

TEST_CASE("property: triple minus pair sums vanish on jointly accepted samples") {
  const SamplePlan plan = angular_plan(TheoremId::t2_6, 2, 24, 100, 1e-3);
  for (const Sample& s : draw_samples(plan)) {
    const double x = std::get<AngleInput>(s.input).x;
    if (pole_distance(TheoremId::t2_5, s.n, Angle{x}) < 1e-3 ||
        pole_distance(TheoremId::t2_6, s.n, Angle{x}) < 1e-3)
      continue;
    const double triple = tan_triple_sum(s.n, Angle{x});
    const double d = triple - tan_pair_sum(s.n, Angle{x}) - tan_pair_sum(s.n - 1, Angle{x});
    CHECK(std::fabs(d) <= 1e-9 * std::max(1.0, std::fabs(triple)));
  }
}
