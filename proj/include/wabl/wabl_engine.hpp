#pragma once

#include "wabl/fuzzy_core.hpp"
#include "wabl/level_weights.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace wabl {

/// Decision maker's optimism c in [0, 1]: 0 averages left bounds only,
/// 1 right bounds only.
class OptimismConfig {
public:
  /// Throws DomainError for c outside [0, 1] or NaN.
  explicit OptimismConfig(double c);
  double c() const noexcept { return c_; }

private:
  double c_;
};

enum class WablPath {
  GeneralSummation,
  ClosedConstant,
  ClosedLinear,
  ClosedQuadratic,
  ClosedContinuous,
  Quadrature,
};

std::string_view to_string(WablPath path) noexcept;

// One summand p(alpha) * M(alpha) of a discrete WABL value.
struct LevelTerm {
  double alpha = 0.0;
  double mass = 0.0;
  Interval cut;
  double mean = 0.0;
  // False when alpha is not a membership value of the discrete number.
  bool native_level = true;
};

struct WablResult {
  double value = 0.0;
  WablPath path = WablPath::GeneralSummation;
  std::optional<std::vector<LevelTerm>> breakdown;
};

enum class Dispatch { PreferClosedForm, ForceSummation };

/// M = (1 - c) lo + c hi.
double mean_at_level(const Interval &cut, const OptimismConfig &cfg) noexcept;

/// M(0): level mean over the support [l, r].
double support_mean(const TrapezoidalFN &fn, const OptimismConfig &cfg) noexcept;
/// M(1): level mean over the core [m_l, m_r].
double core_mean(const TrapezoidalFN &fn, const OptimismConfig &cfg) noexcept;

/// Sum over levels of p(alpha) M(alpha) with M taken from the discrete cuts.
/// Zero-mass levels never need a cut; a positive mass on an empty cut
/// throws EmptyCutError, on alpha = 0 DomainError.
WablResult wabl_discrete(const DiscreteFN &fn, const DiscreteWeights &weights, const OptimismConfig &cfg);

/// WABL of a trapezoid leveled at alpha_i = i / t with q_i = i^k weights.
/// Uses the closed forms for k <= 2 unless summation is forced; summation
/// evaluates each cut from lr_bounds and fills the breakdown.
WablResult wabl_trapezoid_pattern(const TrapezoidalFN &fn, const EqualSpacedScheme &scheme,
                                  const OptimismConfig &cfg, Dispatch dispatch = Dispatch::PreferClosedForm);

// Closed forms for equal-spaced levels. All throw DomainError for t < 1.

/// Constant weights: (M(0) + M(1)) / 2, independent of t.
double closed_form_constant(const TrapezoidalFN &fn, const OptimismConfig &cfg) noexcept;
/// Linear weights: M(0) + (2t + 1) / (3t) (M(1) - M(0)).
double closed_form_linear(const TrapezoidalFN &fn, long long t, const OptimismConfig &cfg);
/// Quadratic weights: M(0) + 3(t + 1) / (2(2t + 1)) (M(1) - M(0)).
double closed_form_quadratic(const TrapezoidalFN &fn, long long t, const OptimismConfig &cfg);

/// Continuous WABL with density (k + 1) alpha^k, closed form.
double wabl_continuous_closed(const TrapezoidalFN &fn, PatternExponent k, const OptimismConfig &cfg) noexcept;
/// Same integral by Gauss-Legendre with ceil((k + 2) / 2) + 2 nodes.
double wabl_continuous_quadrature(const TrapezoidalFN &fn, PatternExponent k, const OptimismConfig &cfg);

/// sum_{i=0..t} M(i / t), summed term by term.
double sum_means(const TrapezoidalFN &fn, long long t, const OptimismConfig &cfg);
/// sum_{i=0..t} i M(i / t), summed term by term.
double weighted_sum_means(const TrapezoidalFN &fn, long long t, const OptimismConfig &cfg);

/// ((t + 1) / 2)(M(0) + M(1)).
double sum_means_identity(const TrapezoidalFN &fn, long long t, const OptimismConfig &cfg);
/// (t + 1)(3t M(0) + (2t + 1)(M(1) - M(0))) / 6.
double weighted_sum_means_identity(const TrapezoidalFN &fn, long long t, const OptimismConfig &cfg);

} // namespace wabl
