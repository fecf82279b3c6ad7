#pragma once

#include <span>
#include <vector>

namespace wabl {

// Closed interval [lo, hi]. Used for alpha-cuts: lo = L(alpha), hi = R(alpha).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  bool contains(const Interval &inner) const noexcept { return lo <= inner.lo && inner.hi <= hi; }
  friend bool operator==(const Interval &, const Interval &) = default;
};

/// Trapezoidal fuzzy number (l, m_l, m_r, r).
///
/// Membership rises linearly on [l, m_l], is 1 on the core [m_l, m_r] and
/// falls linearly on [m_r, r]. A triangular number is the case m_l == m_r,
/// a crisp number the case where all four coincide.
class TrapezoidalFN {
public:
  /// Throws DomainError unless l <= m_l <= m_r <= r and all are finite.
  TrapezoidalFN(double l, double m_l, double m_r, double r);

  /// Triangular number (l, m, r) stored as (l, m, m, r).
  static TrapezoidalFN triangle(double l, double m, double r) { return {l, m, m, r}; }
  static TrapezoidalFN crisp(double x) { return {x, x, x, x}; }

  double l() const noexcept { return l_; }
  double m_l() const noexcept { return m_l_; }
  double m_r() const noexcept { return m_r_; }
  double r() const noexcept { return r_; }

  bool is_triangular() const noexcept { return m_l_ == m_r_; }

  friend bool operator==(const TrapezoidalFN &, const TrapezoidalFN &) = default;

private:
  double l_, m_l_, m_r_, r_;
};

/// One support point of a discrete fuzzy number.
struct DiscretePoint {
  double x = 0.0;
  double mu = 0.0;
  friend bool operator==(const DiscretePoint &, const DiscretePoint &) = default;
};

/// Fuzzy number over a finite universe: points (x_i, mu_i), x strictly
/// increasing, every mu in (0, 1].
///
/// A normal number reaches mu = 1 somewhere. Non-normal values are legal
/// only when constructed with Normality::Relaxed; they keep that flag so
/// callers can tell a coarse discretization from a well-formed input.
class DiscreteFN {
public:
  enum class Normality { Strict, Relaxed };

  explicit DiscreteFN(std::vector<DiscretePoint> points, Normality mode = Normality::Strict);

  std::span<const DiscretePoint> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double max_membership() const noexcept { return max_mu_; }
  bool is_normal() const noexcept { return max_mu_ == 1.0; }
  bool relaxed() const noexcept { return relaxed_; }

  friend bool operator==(const DiscreteFN &a, const DiscreteFN &b) { return a.points_ == b.points_; }

private:
  std::vector<DiscretePoint> points_;
  double max_mu_ = 0.0;
  bool relaxed_ = false;
};

/// Strictly increasing membership levels in (0, 1]. A leading 0 is accepted
/// so equal-spaced schemes can carry alpha_0 = 0.
class LevelSet {
public:
  LevelSet() = default;
  explicit LevelSet(std::vector<double> alphas);

  std::span<const double> alphas() const noexcept { return alphas_; }
  std::size_t size() const noexcept { return alphas_.size(); }
  bool empty() const noexcept { return alphas_.empty(); }
  double operator[](std::size_t i) const { return alphas_[i]; }
  bool contains(double alpha) const noexcept;

  friend bool operator==(const LevelSet &, const LevelSet &) = default;

private:
  std::vector<double> alphas_;
};

/// Piecewise-linear membership; 0 outside [l, r].
double membership(const TrapezoidalFN &fn, double x) noexcept;

/// (L(alpha), R(alpha)) for alpha in [0, 1]. At alpha = 0 this is the
/// support closure [l, r].
Interval lr_bounds(const TrapezoidalFN &fn, double alpha);

/// Min and max of {x_i : mu_i >= alpha}, alpha in (0, 1].
/// Throws EmptyCutError when alpha exceeds the maximum membership.
Interval alpha_cut(const DiscreteFN &fn, double alpha);

/// Sorted distinct membership values of fn.
LevelSet native_levels(const DiscreteFN &fn);

/// Samples fn on a strictly increasing universe, dropping zero-membership
/// points. The result is Relaxed when no sample reaches mu = 1.
DiscreteFN discretize(const TrapezoidalFN &fn, std::span<const double> universe);

} // namespace wabl
