#include "wabl/fuzzy_core.hpp"

#include "wabl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wabl {

namespace {

void require_unit_level(double alpha, bool allow_zero) {
  const bool ok = allow_zero ? (alpha >= 0.0 && alpha <= 1.0) : (alpha > 0.0 && alpha <= 1.0);
  if (!ok) {
    std::ostringstream os;
    os << "level " << alpha << " outside " << (allow_zero ? "[0, 1]" : "(0, 1]");
    throw DomainError(os.str());
  }
}

} // namespace

TrapezoidalFN::TrapezoidalFN(double l, double m_l, double m_r, double r) : l_(l), m_l_(m_l), m_r_(m_r), r_(r) {
  if (!std::isfinite(l) || !std::isfinite(m_l) || !std::isfinite(m_r) || !std::isfinite(r)) {
    throw DomainError("trapezoid parameters must be finite");
  }
  if (!(l <= m_l && m_l <= m_r && m_r <= r)) {
    std::ostringstream os;
    os << "trapezoid parameters must satisfy l <= m_l <= m_r <= r, got (" << l << ", " << m_l << ", " << m_r << ", "
       << r << ")";
    throw DomainError(os.str());
  }
}

DiscreteFN::DiscreteFN(std::vector<DiscretePoint> points, Normality mode) : points_(std::move(points)) {
  if (points_.empty()) {
    throw DomainError("discrete fuzzy number needs at least one point");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto &p = points_[i];
    if (!std::isfinite(p.x)) {
      throw DomainError("discrete point coordinates must be finite");
    }
    if (!(p.mu > 0.0 && p.mu <= 1.0)) {
      std::ostringstream os;
      os << "membership " << p.mu << " at x = " << p.x << " outside (0, 1]";
      throw DomainError(os.str());
    }
    if (i > 0 && !(points_[i - 1].x < p.x)) {
      std::ostringstream os;
      os << "discrete points must be strictly increasing in x (x = " << points_[i - 1].x << " followed by " << p.x
         << ")";
      throw DomainError(os.str());
    }
    max_mu_ = std::max(max_mu_, p.mu);
  }
  if (max_mu_ < 1.0) {
    if (mode == Normality::Strict) {
      std::ostringstream os;
      os << "discrete fuzzy number is not normal (max membership " << max_mu_ << ")";
      throw DomainError(os.str());
    }
    relaxed_ = true;
  }
}

LevelSet::LevelSet(std::vector<double> alphas) : alphas_(std::move(alphas)) {
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    // alpha_0 = 0 is only meaningful as the first level.
    require_unit_level(alphas_[i], i == 0);
    if (i > 0 && !(alphas_[i - 1] < alphas_[i])) {
      std::ostringstream os;
      os << "levels must be strictly increasing (" << alphas_[i - 1] << " followed by " << alphas_[i] << ")";
      throw DomainError(os.str());
    }
  }
}

bool LevelSet::contains(double alpha) const noexcept {
  return std::binary_search(alphas_.begin(), alphas_.end(), alpha);
}

double membership(const TrapezoidalFN &fn, double x) noexcept {
  if (x >= fn.m_l() && x <= fn.m_r()) {
    return 1.0;
  }
  if (x >= fn.l() && x < fn.m_l()) {
    return (x - fn.l()) / (fn.m_l() - fn.l());
  }
  if (x > fn.m_r() && x < fn.r()) {
    return (fn.r() - x) / (fn.r() - fn.m_r());
  }
  return 0.0;
}

Interval lr_bounds(const TrapezoidalFN &fn, double alpha) {
  require_unit_level(alpha, true);
  return {fn.l() + alpha * (fn.m_l() - fn.l()), fn.r() - alpha * (fn.r() - fn.m_r())};
}

Interval alpha_cut(const DiscreteFN &fn, double alpha) {
  require_unit_level(alpha, false);
  const auto pts = fn.points();
  auto in_cut = [alpha](const DiscretePoint &p) { return p.mu >= alpha; };
  const auto first = std::find_if(pts.begin(), pts.end(), in_cut);
  if (first == pts.end()) {
    std::ostringstream os;
    os << "alpha-cut at level " << alpha << " is empty (max membership " << fn.max_membership() << ")";
    throw EmptyCutError(alpha, os.str());
  }
  const auto last = std::find_if(pts.rbegin(), pts.rend(), in_cut);
  return {first->x, last->x};
}

LevelSet native_levels(const DiscreteFN &fn) {
  std::vector<double> mus;
  mus.reserve(fn.size());
  for (const auto &p : fn.points()) {
    mus.push_back(p.mu);
  }
  std::sort(mus.begin(), mus.end());
  mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
  return LevelSet(std::move(mus));
}

DiscreteFN discretize(const TrapezoidalFN &fn, std::span<const double> universe) {
  if (universe.empty()) {
    throw DomainError("discretization universe is empty");
  }
  std::vector<DiscretePoint> points;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (i > 0 && !(universe[i - 1] < universe[i])) {
      throw DomainError("discretization universe must be strictly increasing");
    }
    const double mu = membership(fn, universe[i]);
    if (mu > 0.0) {
      points.push_back({universe[i], mu});
    }
  }
  if (points.empty()) {
    throw DomainError("discretization produced no point with positive membership");
  }
  return DiscreteFN(std::move(points), DiscreteFN::Normality::Relaxed);
}

} // namespace wabl
