#include "wabl/level_weights.hpp"

#include "wabl/errors.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

namespace wabl {

namespace {

// i^k in uint64, false on overflow.
bool checked_pow(std::uint64_t base, unsigned k, std::uint64_t &out) {
  std::uint64_t acc = 1;
  for (unsigned j = 0; j < k; ++j) {
    if (__builtin_mul_overflow(acc, base, &acc)) {
      return false;
    }
  }
  out = acc;
  return true;
}

} // namespace

EqualSpacedScheme::EqualSpacedScheme(long long t, PatternExponent k) : t_(t), k_(k) {
  if (t < 1) {
    std::ostringstream os;
    os << "number of level sub-intervals t must be >= 1, got " << t;
    throw DomainError(os.str());
  }
}

DiscreteWeights::DiscreteWeights(LevelSet levels, std::vector<double> masses)
    : levels_(std::move(levels)), masses_(std::move(masses)) {
  if (levels_.size() != masses_.size()) {
    std::ostringstream os;
    os << "got " << levels_.size() << " levels but " << masses_.size() << " masses";
    throw DomainError(os.str());
  }
  if (masses_.empty()) {
    throw DomainError("weights need at least one level");
  }
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    if (!std::isfinite(masses_[i]) || masses_[i] < 0.0) {
      std::ostringstream os;
      os << "mass " << masses_[i] << " at level " << levels_[i] << " is negative or not finite";
      throw DomainError(os.str());
    }
  }
  const double sum = compensated_sum(masses_);
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "level masses sum to " << sum << ", expected 1";
    throw NormalizationError(sum, os.str());
  }
}

PatternTable pattern_table(const EqualSpacedScheme &scheme) {
  const auto t = static_cast<std::uint64_t>(scheme.t());
  const unsigned k = scheme.k().value;

  PatternTable table;
  table.q.reserve(t + 1);
  std::uint64_t exact_total = 0;
  long double float_total = 0.0L;
  for (std::uint64_t i = 0; i <= t; ++i) {
    std::uint64_t qi = 0;
    std::uint64_t next_total = 0;
    if (table.exact && checked_pow(i, k, qi) && !__builtin_add_overflow(exact_total, qi, &next_total)) {
      exact_total = next_total;
      table.q.push_back(static_cast<double>(qi));
      continue;
    }
    if (table.exact) {
      // Switch to floating accumulation; earlier q_i stay as they are.
      table.exact = false;
      float_total = static_cast<long double>(exact_total);
    }
    const long double qf = std::pow(static_cast<long double>(i), static_cast<long double>(k));
    float_total += qf;
    table.q.push_back(static_cast<double>(qf));
  }
  table.total = table.exact ? static_cast<double>(exact_total) : static_cast<double>(float_total);
  return table;
}

DiscreteWeights pattern_weights(const EqualSpacedScheme &scheme) {
  const PatternTable table = pattern_table(scheme);
  std::vector<double> alphas(table.q.size());
  std::vector<double> masses(table.q.size());
  for (std::size_t i = 0; i < table.q.size(); ++i) {
    alphas[i] = scheme.level(static_cast<long long>(i));
    masses[i] = table.q[i] / table.total;
  }
  return DiscreteWeights(LevelSet(std::move(alphas)), std::move(masses));
}

DiscreteWeights explicit_weights(LevelSet levels, std::vector<double> masses) {
  if (levels.size() != masses.size()) {
    std::ostringstream os;
    os << "got " << levels.size() << " levels but " << masses.size() << " masses";
    throw DomainError(os.str());
  }
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (!std::isfinite(masses[i]) || masses[i] < 0.0) {
      std::ostringstream os;
      os << "mass " << masses[i] << " at level " << levels[i] << " is negative or not finite";
      throw DomainError(os.str());
    }
  }
  const double sum = compensated_sum(masses);
  if (std::abs(sum - 1.0) > kWeightRejectTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "level masses sum to " << sum << ", expected 1";
    throw NormalizationError(sum, os.str());
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    for (double &m : masses) {
      m /= sum;
    }
  }
  return DiscreteWeights(std::move(levels), std::move(masses));
}

std::vector<double> normalize(std::span<const double> raw) {
  for (double v : raw) {
    if (!std::isfinite(v) || v < 0.0) {
      std::ostringstream os;
      os << "cannot normalize negative or non-finite entry " << v;
      throw DomainError(os.str());
    }
  }
  const double total = compensated_sum(raw);
  if (!(total > 0.0)) {
    throw DomainError("cannot normalize an all-zero weight vector");
  }
  std::vector<double> out(raw.begin(), raw.end());
  for (double &v : out) {
    v /= total;
  }
  return out;
}

double continuous_density(PatternExponent k, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    std::ostringstream os;
    os << "density argument " << alpha << " outside [0, 1]";
    throw DomainError(os.str());
  }
  // std::pow(0, 0) == 1, so k = 0 is the constant density.
  return static_cast<double>(k.value + 1) * std::pow(alpha, static_cast<double>(k.value));
}

double compensated_sum(std::span<const double> values) noexcept {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double next = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - next) + v;
    } else {
      carry += (v - next) + sum;
    }
    sum = next;
  }
  return sum + carry;
}

} // namespace wabl
