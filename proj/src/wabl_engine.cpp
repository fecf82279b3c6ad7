#include "wabl/wabl_engine.hpp"

#include "wabl/errors.hpp"
#include "wabl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wabl {

namespace {

void require_positive_t(long long t) {
  if (t < 1) {
    std::ostringstream os;
    os << "number of level sub-intervals t must be >= 1, got " << t;
    throw DomainError(os.str());
  }
}

// A weighted mean of level means cannot leave the support; rounding can.
double clamp_to_support(double value, const TrapezoidalFN &fn) noexcept {
  return std::clamp(value, fn.l(), fn.r());
}

double interpolate_means(const TrapezoidalFN &fn, const OptimismConfig &cfg, double coefficient) noexcept {
  const double m0 = support_mean(fn, cfg);
  const double m1 = core_mean(fn, cfg);
  return clamp_to_support(m0 + coefficient * (m1 - m0), fn);
}

} // namespace

OptimismConfig::OptimismConfig(double c) : c_(c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    std::ostringstream os;
    os << "optimism coefficient c = " << c << " outside [0, 1]";
    throw DomainError(os.str());
  }
}

std::string_view to_string(WablPath path) noexcept {
  switch (path) {
  case WablPath::GeneralSummation:
    return "summation";
  case WablPath::ClosedConstant:
    return "closed-constant";
  case WablPath::ClosedLinear:
    return "closed-linear";
  case WablPath::ClosedQuadratic:
    return "closed-quadratic";
  case WablPath::ClosedContinuous:
    return "closed-continuous";
  case WablPath::Quadrature:
    return "quadrature";
  }
  return "unknown";
}

double mean_at_level(const Interval &cut, const OptimismConfig &cfg) noexcept {
  const double c = cfg.c();
  return std::clamp((1.0 - c) * cut.lo + c * cut.hi, cut.lo, cut.hi);
}

double support_mean(const TrapezoidalFN &fn, const OptimismConfig &cfg) noexcept {
  return mean_at_level({fn.l(), fn.r()}, cfg);
}

double core_mean(const TrapezoidalFN &fn, const OptimismConfig &cfg) noexcept {
  return mean_at_level({fn.m_l(), fn.m_r()}, cfg);
}

WablResult wabl_discrete(const DiscreteFN &fn, const DiscreteWeights &weights, const OptimismConfig &cfg) {
  const LevelSet native = native_levels(fn);
  const auto masses = weights.masses();

  WablResult result;
  result.path = WablPath::GeneralSummation;
  std::vector<LevelTerm> terms;
  terms.reserve(weights.size());
  double lo = fn.points().back().x;
  double hi = fn.points().front().x;
  double value = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double alpha = weights.levels()[i];
    const double mass = masses[i];
    if (mass == 0.0 && (alpha == 0.0 || alpha > fn.max_membership())) {
      continue;
    }
    if (alpha == 0.0) {
      throw DomainError("discrete fuzzy numbers have no cut at level 0; give it zero mass or drop it");
    }
    LevelTerm term;
    term.alpha = alpha;
    term.mass = mass;
    term.cut = alpha_cut(fn, alpha);
    term.mean = mean_at_level(term.cut, cfg);
    term.native_level = native.contains(alpha);
    value += mass * term.mean;
    if (mass > 0.0) {
      lo = std::min(lo, term.cut.lo);
      hi = std::max(hi, term.cut.hi);
    }
    terms.push_back(term);
  }
  result.value = lo <= hi ? std::clamp(value, lo, hi) : value;
  result.breakdown = std::move(terms);
  return result;
}

WablResult wabl_trapezoid_pattern(const TrapezoidalFN &fn, const EqualSpacedScheme &scheme,
                                  const OptimismConfig &cfg, Dispatch dispatch) {
  WablResult result;
  if (dispatch == Dispatch::PreferClosedForm) {
    switch (scheme.k().value) {
    case 0:
      result.value = closed_form_constant(fn, cfg);
      result.path = WablPath::ClosedConstant;
      return result;
    case 1:
      result.value = closed_form_linear(fn, scheme.t(), cfg);
      result.path = WablPath::ClosedLinear;
      return result;
    case 2:
      result.value = closed_form_quadratic(fn, scheme.t(), cfg);
      result.path = WablPath::ClosedQuadratic;
      return result;
    default:
      break;
    }
  }

  const DiscreteWeights weights = pattern_weights(scheme);
  const auto masses = weights.masses();
  std::vector<LevelTerm> terms(weights.size());
  double value = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    auto &term = terms[i];
    term.alpha = weights.levels()[i];
    term.mass = masses[i];
    term.cut = lr_bounds(fn, term.alpha);
    term.mean = mean_at_level(term.cut, cfg);
    value += term.mass * term.mean;
  }
  result.value = clamp_to_support(value, fn);
  result.path = WablPath::GeneralSummation;
  result.breakdown = std::move(terms);
  return result;
}

double closed_form_constant(const TrapezoidalFN &fn, const OptimismConfig &cfg) noexcept {
  return clamp_to_support(0.5 * (support_mean(fn, cfg) + core_mean(fn, cfg)), fn);
}

double closed_form_linear(const TrapezoidalFN &fn, long long t, const OptimismConfig &cfg) {
  require_positive_t(t);
  const auto td = static_cast<double>(t);
  return interpolate_means(fn, cfg, (2.0 * td + 1.0) / (3.0 * td));
}

double closed_form_quadratic(const TrapezoidalFN &fn, long long t, const OptimismConfig &cfg) {
  require_positive_t(t);
  // sum_i p_i alpha_i with p_i = 6 i^2 / (t (t + 1)(2t + 1)) and alpha_i = i / t,
  // using sum i^3 = t^2 (t + 1)^2 / 4.
  const auto td = static_cast<double>(t);
  return interpolate_means(fn, cfg, 3.0 * (td + 1.0) / (2.0 * (2.0 * td + 1.0)));
}

double wabl_continuous_closed(const TrapezoidalFN &fn, PatternExponent k, const OptimismConfig &cfg) noexcept {
  const double c = cfg.c();
  const double ratio = static_cast<double>(k.value + 1) / static_cast<double>(k.value + 2);
  const double right = fn.r() - ratio * (fn.r() - fn.m_r());
  const double left = fn.l() + ratio * (fn.m_l() - fn.l());
  return clamp_to_support(c * right + (1.0 - c) * left, fn);
}

double wabl_continuous_quadrature(const TrapezoidalFN &fn, PatternExponent k, const OptimismConfig &cfg) {
  // Integrand is a polynomial of degree k + 1.
  const std::size_t nodes = (k.value + 3) / 2 + 2;
  const GaussLegendreRule rule = gauss_legendre(nodes);
  return clamp_to_support(
      rule.integrate([&](double alpha) { return continuous_density(k, alpha) * mean_at_level(lr_bounds(fn, alpha), cfg); }),
      fn);
}

double sum_means(const TrapezoidalFN &fn, long long t, const OptimismConfig &cfg) {
  const EqualSpacedScheme scheme(t, PatternExponent{0});
  double sum = 0.0;
  for (long long i = 0; i <= t; ++i) {
    sum += mean_at_level(lr_bounds(fn, scheme.level(i)), cfg);
  }
  return sum;
}

double weighted_sum_means(const TrapezoidalFN &fn, long long t, const OptimismConfig &cfg) {
  const EqualSpacedScheme scheme(t, PatternExponent{1});
  double sum = 0.0;
  for (long long i = 0; i <= t; ++i) {
    sum += static_cast<double>(i) * mean_at_level(lr_bounds(fn, scheme.level(i)), cfg);
  }
  return sum;
}

double sum_means_identity(const TrapezoidalFN &fn, long long t, const OptimismConfig &cfg) {
  require_positive_t(t);
  const auto td = static_cast<double>(t);
  return 0.5 * (td + 1.0) * (support_mean(fn, cfg) + core_mean(fn, cfg));
}

double weighted_sum_means_identity(const TrapezoidalFN &fn, long long t, const OptimismConfig &cfg) {
  require_positive_t(t);
  const auto td = static_cast<double>(t);
  const double m0 = support_mean(fn, cfg);
  const double m1 = core_mean(fn, cfg);
  return (td + 1.0) * (3.0 * td * m0 + (2.0 * td + 1.0) * (m1 - m0)) / 6.0;
}

} // namespace wabl
