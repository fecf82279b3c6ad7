#include <doctest.h>

#include "oracles.hpp"
#include "wabl/errors.hpp"
#include "wabl/wabl_engine.hpp"

#include <cmath>

using namespace wabl;

namespace {

const TrapezoidalFN kA(10, 14, 15, 23);

DiscreteFN example_discrete() {
  return DiscreteFN({{-2, 0.1}, {0, 0.4}, {1, 0.7}, {2, 1.0}, {4, 0.7}, {5, 0.5}});
}

DiscreteWeights example_weights() {
  return explicit_weights(LevelSet({0.1, 0.4, 0.5, 0.7, 1.0}), {0.1, 0.3, 0.3, 0.2, 0.1});
}

} // namespace

TEST_CASE("optimism coefficient range") {
  CHECK_NOTHROW(OptimismConfig(0.0));
  CHECK_NOTHROW(OptimismConfig(1.0));
  CHECK_THROWS_AS(OptimismConfig(-0.1), DomainError);
  CHECK_THROWS_AS(OptimismConfig(1.1), DomainError);
  CHECK_THROWS_AS(OptimismConfig(NAN), DomainError);
}

TEST_CASE("mean_at_level") {
  CHECK(mean_at_level({-2, 5}, OptimismConfig(0.2)) == doctest::Approx(-0.6).epsilon(1e-15));
  CHECK(mean_at_level({10, 23}, OptimismConfig(0.8)) == doctest::Approx(20.4).epsilon(1e-15));
  for (double c : {0.0, 0.3, 1.0}) {
    CHECK(mean_at_level({4.25, 4.25}, OptimismConfig(c)) == 4.25);
  }
  CHECK(mean_at_level({1, 3}, OptimismConfig(0.0)) == 1.0);
  CHECK(mean_at_level({1, 3}, OptimismConfig(1.0)) == 3.0);
  CHECK(support_mean(kA, OptimismConfig(0.8)) == doctest::Approx(20.4).epsilon(1e-15));
  CHECK(core_mean(kA, OptimismConfig(0.8)) == doctest::Approx(14.8).epsilon(1e-15));
}

TEST_CASE("wabl_discrete on the worked example") {
  const auto result = wabl_discrete(example_discrete(), example_weights(), OptimismConfig(0.2));
  CHECK(std::abs(result.value - 1.3) <= 1e-12);
  CHECK(result.path == WablPath::GeneralSummation);
  REQUIRE(result.breakdown);
  const std::vector<double> means{-0.6, 1.0, 1.8, 1.6, 2.0};
  REQUIRE(result.breakdown->size() == means.size());
  double recomposed = 0.0;
  for (std::size_t i = 0; i < means.size(); ++i) {
    const auto &term = (*result.breakdown)[i];
    CHECK(std::abs(term.mean - means[i]) <= 1e-12);
    CHECK(term.native_level);
    recomposed += term.mass * term.mean;
  }
  CHECK(std::abs(recomposed - result.value) <= 1e-12);

  const auto oracle_value = oracle::discrete_wabl({{-2, 0.1}, {0, 0.4}, {1, 0.7}, {2, 1.0}, {4, 0.7}, {5, 0.5}},
                                                  {{0.1, 0.1}, {0.4, 0.3}, {0.5, 0.3}, {0.7, 0.2}, {1.0, 0.1}}, 0.2L);
  CHECK(std::abs(result.value - static_cast<double>(oracle_value)) <= 1e-12);
}

TEST_CASE("wabl_discrete edge cases") {
  CHECK(wabl_discrete(DiscreteFN({{7, 1.0}}), explicit_weights(LevelSet({1.0}), {1.0}), OptimismConfig(0.37)).value ==
        7.0);
  const auto top = wabl_discrete(example_discrete(), explicit_weights(LevelSet({1.0}), {1.0}), OptimismConfig(0.2));
  CHECK(std::abs(top.value - 2.0) <= 1e-12);

  SUBCASE("levels outside the native set are allowed and marked") {
    const auto r = wabl_discrete(example_discrete(), explicit_weights(LevelSet({0.45, 1.0}), {0.5, 0.5}),
                                 OptimismConfig(0.5));
    REQUIRE(r.breakdown);
    CHECK_FALSE((*r.breakdown)[0].native_level);
    CHECK((*r.breakdown)[1].native_level);
    CHECK(r.value == doctest::Approx(0.5 * 3.0 + 0.5 * 2.0));
  }

  SUBCASE("positive mass above the max membership is an empty cut") {
    const DiscreteFN low({{0, 0.3}, {1, 0.6}}, DiscreteFN::Normality::Relaxed);
    CHECK_THROWS_AS(wabl_discrete(low, explicit_weights(LevelSet({0.3, 0.9}), {0.5, 0.5}), OptimismConfig(0.5)),
                    EmptyCutError);
    // Zero mass on that level is harmless.
    const auto r = wabl_discrete(low, explicit_weights(LevelSet({0.3, 0.9}), {1.0, 0.0}), OptimismConfig(0.5));
    CHECK(r.value == 0.5);
  }

  SUBCASE("level zero needs zero mass") {
    const auto zero_mass = pattern_weights(EqualSpacedScheme(4, PatternExponent{1}));
    CHECK_NOTHROW(wabl_discrete(example_discrete(), zero_mass, OptimismConfig(0.5)));
    const auto uniform = pattern_weights(EqualSpacedScheme(4, PatternExponent{0}));
    CHECK_THROWS_AS(wabl_discrete(example_discrete(), uniform, OptimismConfig(0.5)), DomainError);
  }
}

TEST_CASE("trapezoid pattern values for t = 4, c = 0.8") {
  const OptimismConfig c(0.8);
  const auto k0 = wabl_trapezoid_pattern(kA, EqualSpacedScheme(4, PatternExponent{0}), c);
  CHECK(k0.path == WablPath::ClosedConstant);
  CHECK(std::abs(k0.value - 17.6) <= 1e-12);
  CHECK_FALSE(k0.breakdown);

  const auto k1 = wabl_trapezoid_pattern(kA, EqualSpacedScheme(4, PatternExponent{1}), c);
  CHECK(k1.path == WablPath::ClosedLinear);
  CHECK(std::abs(k1.value - 16.2) <= 1e-12);

  const auto k2 = wabl_trapezoid_pattern(kA, EqualSpacedScheme(4, PatternExponent{2}), c);
  CHECK(k2.path == WablPath::ClosedQuadratic);
  CHECK(std::abs(k2.value - 236.0 / 15.0) <= 1e-12);

  for (unsigned k = 0; k <= 2; ++k) {
    const auto forced = wabl_trapezoid_pattern(kA, EqualSpacedScheme(4, PatternExponent{k}), c, Dispatch::ForceSummation);
    CHECK(forced.path == WablPath::GeneralSummation);
    REQUIRE(forced.breakdown);
    const std::vector<double> means{20.4, 19.0, 17.6, 16.2, 14.8};
    for (std::size_t i = 0; i < means.size(); ++i) {
      CHECK(std::abs((*forced.breakdown)[i].mean - means[i]) <= 1e-12);
    }
  }
  CHECK(std::abs(wabl_trapezoid_pattern(kA, EqualSpacedScheme(4, PatternExponent{1}), c, Dispatch::ForceSummation).value -
                 16.2) <= 1e-12);

  SUBCASE("k above 2 always sums") {
    const auto k3 = wabl_trapezoid_pattern(kA, EqualSpacedScheme(4, PatternExponent{3}), c);
    CHECK(k3.path == WablPath::GeneralSummation);
    CHECK(std::abs(k3.value - static_cast<double>(oracle::pattern_wabl({10, 14, 15, 23}, 4, 3, 0.8L))) <= 1e-12);
  }
}

TEST_CASE("closed forms") {
  const OptimismConfig c(0.8);
  CHECK(std::abs(closed_form_constant(kA, c) - 17.6) <= 1e-12);
  CHECK(closed_form_constant(TrapezoidalFN::crisp(3.5), OptimismConfig(0.1)) == 3.5);
  CHECK(closed_form_constant(TrapezoidalFN(0, 1, 1, 2), OptimismConfig(0.5)) == 1.0);

  CHECK(std::abs(closed_form_linear(kA, 4, c) - 16.2) <= 1e-12);
  // The printed 19.9 for this case is an arithmetic slip: 20.4 + 0.75 * (14.8 - 20.4) = 16.2.
  CHECK(std::abs(closed_form_linear(kA, 4, c) - 19.9) > 1.0);
  CHECK(closed_form_linear(kA, 1, c) == doctest::Approx(core_mean(kA, c)).epsilon(1e-15));
  CHECK(closed_form_linear(TrapezoidalFN(0, 1, 1, 2), 10, OptimismConfig(0.5)) == 1.0);
  CHECK_THROWS_AS(closed_form_linear(kA, 0, c), DomainError);

  CHECK(std::abs(closed_form_quadratic(kA, 4, c) - 236.0 / 15.0) <= 1e-12);
  CHECK(closed_form_quadratic(TrapezoidalFN::crisp(-2.25), 9, c) == -2.25);
  CHECK(closed_form_quadratic(TrapezoidalFN(0, 1, 1, 2), 1000000, OptimismConfig(1.0)) ==
        doctest::Approx(1.25).epsilon(1e-6));
  CHECK_THROWS_AS(closed_form_quadratic(kA, 0, c), DomainError);
}

TEST_CASE("quadratic coefficient against exact power sums") {
  // sum_i (i^2 / sum_j j^2)(i / t) with integer power sums.
  for (long long t = 1; t <= 300; ++t) {
    long long s2 = 0;
    long long s3 = 0;
    for (long long i = 0; i <= t; ++i) {
      s2 += i * i;
      s3 += i * i * i;
    }
    CHECK(s3 * 4 == t * t * (t + 1) * (t + 1));
    const double from_sums = static_cast<double>(s3) / (static_cast<double>(s2) * static_cast<double>(t));
    const double closed = 3.0 * (t + 1.0) / (2.0 * (2.0 * t + 1.0));
    CHECK(from_sums == doctest::Approx(closed).epsilon(1e-15));
  }
}

TEST_CASE("continuous closed form and quadrature") {
  const OptimismConfig c(0.8);
  const double expected = 0.8 * (23.0 - 2.0 / 3.0 * 8.0) + 0.2 * (10.0 + 2.0 / 3.0 * 4.0);
  CHECK(std::abs(wabl_continuous_closed(kA, PatternExponent{1}, c) - expected) <= 1e-12);
  CHECK(std::abs(wabl_continuous_quadrature(kA, PatternExponent{1}, c) - expected) <= 1e-12);
  CHECK(expected == doctest::Approx(16.6667).epsilon(1e-5));

  const double l = -3, m = 1.5, r = 8;
  CHECK(wabl_continuous_closed(TrapezoidalFN::triangle(l, m, r), PatternExponent{0}, OptimismConfig(0.5)) ==
        doctest::Approx((l + 2 * m + r) / 4).epsilon(1e-15));
  CHECK(wabl_continuous_closed(TrapezoidalFN::crisp(4.5), PatternExponent{3}, OptimismConfig(0.3)) == 4.5);
  CHECK(std::abs(wabl_continuous_quadrature(TrapezoidalFN::triangle(1, 4, 7), PatternExponent{0}, OptimismConfig(0.5)) -
                 4.0) <= 1e-12);
  CHECK(std::abs(wabl_continuous_quadrature(TrapezoidalFN(0, 0, 0, 1), PatternExponent{0}, OptimismConfig(1.0)) - 0.5) <=
        1e-12);

  for (unsigned k = 0; k <= 6; ++k) {
    const double simpson = static_cast<double>(oracle::continuous_wabl_simpson({10, 14, 15, 23}, k, 0.8L));
    CHECK(std::abs(wabl_continuous_quadrature(kA, PatternExponent{k}, c) - simpson) <= 1e-10);
    CHECK(std::abs(wabl_continuous_closed(kA, PatternExponent{k}, c) - simpson) <= 1e-10);
  }
}

TEST_CASE("level-mean sums") {
  const OptimismConfig c(0.8);
  CHECK(std::abs(sum_means(kA, 4, c) - 88.0) <= 1e-12);
  CHECK(std::abs(sum_means_identity(kA, 4, c) - 88.0) <= 1e-12);
  CHECK(std::abs(weighted_sum_means(kA, 4, c) - 162.0) <= 1e-12);
  CHECK(std::abs(weighted_sum_means_identity(kA, 4, c) - 162.0) <= 1e-12);

  CHECK(sum_means(kA, 1, c) == doctest::Approx(support_mean(kA, c) + core_mean(kA, c)));
  CHECK(weighted_sum_means(kA, 1, c) == doctest::Approx(core_mean(kA, c)));
  CHECK(sum_means(TrapezoidalFN::crisp(2.5), 9, c) == 25.0);
  CHECK(weighted_sum_means(TrapezoidalFN::crisp(2.0), 9, c) == 90.0);
  CHECK_THROWS_AS(sum_means(kA, 0, c), DomainError);
  CHECK_THROWS_AS(weighted_sum_means_identity(kA, 0, c), DomainError);
}
