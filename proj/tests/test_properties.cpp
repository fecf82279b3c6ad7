#include <doctest.h>

#include "oracles.hpp"
#include "wabl/wabl_engine.hpp"

#include <cmath>
#include <random>

using namespace wabl;

namespace {

TrapezoidalFN to_fn(const oracle::Trap &o) { return {o.l, o.ml, o.mr, o.r}; }

constexpr double kCGrid[] = {0.0, 0.25, 0.5, 0.75, 1.0};

// Every value path available for a trapezoid at (t, k).
std::vector<double> all_paths(const TrapezoidalFN &fn, long long t, unsigned k, const OptimismConfig &c) {
  const EqualSpacedScheme scheme(t, PatternExponent{k});
  return {
      wabl_trapezoid_pattern(fn, scheme, c).value,
      wabl_trapezoid_pattern(fn, scheme, c, Dispatch::ForceSummation).value,
      wabl_continuous_closed(fn, PatternExponent{k}, c),
      wabl_continuous_quadrature(fn, PatternExponent{k}, c),
  };
}

} // namespace

TEST_CASE("closed forms agree with raw summation and the independent oracle") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<long long> t_dist(1, 200);
  for (int n = 0; n < 300; ++n) {
    const auto o = oracle::random_trap(rng);
    const auto fn = to_fn(o);
    const long long t = t_dist(rng);
    for (double cv : kCGrid) {
      const OptimismConfig c(cv);
      const EqualSpacedScheme s0(t, PatternExponent{0}), s1(t, PatternExponent{1}), s2(t, PatternExponent{2});
      const double sum0 = wabl_trapezoid_pattern(fn, s0, c, Dispatch::ForceSummation).value;
      const double sum1 = wabl_trapezoid_pattern(fn, s1, c, Dispatch::ForceSummation).value;
      const double sum2 = wabl_trapezoid_pattern(fn, s2, c, Dispatch::ForceSummation).value;
      CHECK(oracle::rel_close(closed_form_constant(fn, c), sum0, 1e-9));
      CHECK(oracle::rel_close(closed_form_linear(fn, t, c), sum1, 1e-9));
      CHECK(oracle::rel_close(closed_form_quadratic(fn, t, c), sum2, 1e-9));
      CHECK(oracle::rel_close(sum0, oracle::pattern_wabl(o, t, 0, cv), 1e-9));
      CHECK(oracle::rel_close(sum1, oracle::pattern_wabl(o, t, 1, cv), 1e-9));
      CHECK(oracle::rel_close(sum2, oracle::pattern_wabl(o, t, 2, cv), 1e-9));

      CHECK(oracle::rel_close(sum_means(fn, t, c), sum_means_identity(fn, t, c), 1e-9));
      CHECK(oracle::rel_close(weighted_sum_means(fn, t, c), weighted_sum_means_identity(fn, t, c), 1e-9));
      CHECK(oracle::rel_close(sum_means(fn, t, c), oracle::sum_of_means(o, t, cv, false), 1e-9));
      CHECK(oracle::rel_close(weighted_sum_means(fn, t, c), oracle::sum_of_means(o, t, cv, true), 1e-9));
    }
  }
}

TEST_CASE("linear pattern converges to the continuous value with gap |M(1) - M(0)| / (3t)") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 50; ++n) {
    const auto fn = to_fn(oracle::random_trap(rng));
    for (double cv : kCGrid) {
      const OptimismConfig c(cv);
      const double continuous = wabl_continuous_closed(fn, PatternExponent{1}, c);
      const double spread = std::abs(core_mean(fn, c) - support_mean(fn, c));
      for (long long t : {10LL, 100LL, 1000LL}) {
        const double discrete = wabl_trapezoid_pattern(fn, EqualSpacedScheme(t, PatternExponent{1}), c).value;
        CHECK(std::abs(std::abs(discrete - continuous) - spread / (3.0 * static_cast<double>(t))) <= 1e-12);
      }
    }
  }
}

TEST_CASE("every path is monotone in c, bounded by the support, and affine equivariant") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long long> t_dist(1, 60);
  std::uniform_real_distribution<double> shift_dist(-50.0, 50.0);
  std::uniform_real_distribution<double> scale_dist(0.1, 10.0);
  for (int n = 0; n < 200; ++n) {
    const auto o = oracle::random_trap(rng);
    const auto fn = to_fn(o);
    const long long t = t_dist(rng);
    const double s = shift_dist(rng);
    const double lambda = scale_dist(rng);
    const TrapezoidalFN shifted(o.l + s, o.ml + s, o.mr + s, o.r + s);
    const TrapezoidalFN scaled(o.l * lambda, o.ml * lambda, o.mr * lambda, o.r * lambda);
    for (unsigned k = 0; k <= 4; ++k) {
      std::vector<double> previous;
      for (double cv : kCGrid) {
        const OptimismConfig c(cv);
        const auto values = all_paths(fn, t, k, c);
        const auto values_shifted = all_paths(shifted, t, k, c);
        const auto values_scaled = all_paths(scaled, t, k, c);
        for (std::size_t p = 0; p < values.size(); ++p) {
          CHECK(values[p] >= fn.l());
          CHECK(values[p] <= fn.r());
          if (!previous.empty()) {
            CHECK(values[p] >= previous[p]);
          }
          const double shift_tol = 1e-12 * (std::abs(o.l) + std::abs(o.r) + std::abs(s));
          const double scale_tol = 1e-12 * lambda * (std::abs(o.l) + std::abs(o.r));
          CHECK(std::abs(values_shifted[p] - (values[p] + s)) <= shift_tol);
          CHECK(std::abs(values_scaled[p] - lambda * values[p]) <= scale_tol);
        }
        previous = values;
      }
    }
  }
}

TEST_CASE("optimism extremes reduce to left or right bound averages") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    const auto o = oracle::random_trap(rng);
    const auto fn = to_fn(o);
    const long long t = 1 + n % 40;
    for (unsigned k = 0; k <= 3; ++k) {
      const auto w = pattern_weights(EqualSpacedScheme(t, PatternExponent{k}));
      long double left = 0.0L;
      long double right = 0.0L;
      for (std::size_t i = 0; i < w.size(); ++i) {
        left += w.masses()[i] * oracle::left_bound(o, w.levels()[i]);
        right += w.masses()[i] * oracle::right_bound(o, w.levels()[i]);
      }
      const EqualSpacedScheme scheme(t, PatternExponent{k});
      for (auto dispatch : {Dispatch::PreferClosedForm, Dispatch::ForceSummation}) {
        CHECK(oracle::rel_close(wabl_trapezoid_pattern(fn, scheme, OptimismConfig(0.0), dispatch).value, left, 1e-12));
        CHECK(oracle::rel_close(wabl_trapezoid_pattern(fn, scheme, OptimismConfig(1.0), dispatch).value, right, 1e-12));
      }
    }
  }
}

TEST_CASE("triangles evaluate as degenerate trapezoids") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n = 0; n < 200; ++n) {
    std::array<double, 3> v{u(rng), u(rng), u(rng)};
    std::sort(v.begin(), v.end());
    const auto tri = TrapezoidalFN::triangle(v[0], v[1], v[2]);
    const double cv = unit(rng);
    for (unsigned k = 0; k <= 6; ++k) {
      const auto expected = oracle::triangle_continuous(v[0], v[1], v[2], k, cv);
      CHECK(std::abs(wabl_continuous_closed(tri, PatternExponent{k}, OptimismConfig(cv)) - expected) <= 1e-10);
    }
    const long long t = 1 + n % 25;
    const oracle::Trap o{v[0], v[1], v[1], v[2]};
    for (unsigned k = 0; k <= 2; ++k) {
      CHECK(oracle::rel_close(
          wabl_trapezoid_pattern(tri, EqualSpacedScheme(t, PatternExponent{k}), OptimismConfig(cv)).value,
          oracle::pattern_wabl(o, t, k, cv), 1e-9));
    }
  }
}
