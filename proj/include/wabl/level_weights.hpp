#pragma once

#include "wabl/fuzzy_core.hpp"

#include <span>
#include <vector>

namespace wabl {

// Absolute tolerance on sum(p_i) - 1 for a stored weight vector.
inline constexpr double kWeightSumTolerance = 1e-12;
// Explicit weights drifting further than this from 1 are rejected outright.
inline constexpr double kWeightRejectTolerance = 1e-9;

/// Exponent k of the power pattern q_i = i^k (and the density (k+1) alpha^k).
struct PatternExponent {
  unsigned value = 0;
  constexpr explicit PatternExponent(unsigned k = 0) noexcept : value(k) {}
  friend constexpr bool operator==(PatternExponent, PatternExponent) = default;
};

/// Equal-spaced levels alpha_i = i / t, i = 0..t, weighted by q_i = i^k.
class EqualSpacedScheme {
public:
  /// Throws DomainError when t < 1.
  EqualSpacedScheme(long long t, PatternExponent k);

  long long t() const noexcept { return t_; }
  PatternExponent k() const noexcept { return k_; }
  double step() const noexcept { return 1.0 / static_cast<double>(t_); }
  double level(long long i) const noexcept { return static_cast<double>(i) / static_cast<double>(t_); }

private:
  long long t_;
  PatternExponent k_;
};

/// Levels paired with nonnegative masses summing to 1.
class DiscreteWeights {
public:
  /// Validates lengths, nonnegativity and |sum - 1| <= kWeightSumTolerance.
  DiscreteWeights(LevelSet levels, std::vector<double> masses);

  const LevelSet &levels() const noexcept { return levels_; }
  std::span<const double> masses() const noexcept { return masses_; }
  std::size_t size() const noexcept { return masses_.size(); }

private:
  LevelSet levels_;
  std::vector<double> masses_;
};

/// Raw pattern values q_i and their total Q for a scheme.
struct PatternTable {
  std::vector<double> q;
  double total = 0.0;
  // True when Q was accumulated in exact 64-bit integer arithmetic.
  bool exact = true;
};

/// q_i = i^k for i = 0..t with 0^0 = 1. Q is summed in uint64 while it
/// fits, otherwise in long double.
PatternTable pattern_table(const EqualSpacedScheme &scheme);

/// p_i = q_i / Q over alpha_i = i / t.
DiscreteWeights pattern_weights(const EqualSpacedScheme &scheme);

/// User-supplied weights. Sums within kWeightRejectTolerance of 1 are
/// rescaled to 1; anything further off throws NormalizationError.
DiscreteWeights explicit_weights(LevelSet levels, std::vector<double> masses);

/// Scales a nonnegative vector to unit sum. Throws DomainError on negative
/// or non-finite entries and on an all-zero input.
std::vector<double> normalize(std::span<const double> raw);

/// (k + 1) alpha^k, alpha in [0, 1].
double continuous_density(PatternExponent k, double alpha);

/// Neumaier-compensated sum.
double compensated_sum(std::span<const double> values) noexcept;

} // namespace wabl
