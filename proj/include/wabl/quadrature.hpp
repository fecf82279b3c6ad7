#pragma once

#include <cstddef>
#include <vector>

namespace wabl {

/// n-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of
/// degree <= 2n - 1.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }

  /// Integral of f over [a, b].
  template <typename F>
  double integrate(F &&f, double a = 0.0, double b = 1.0) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      sum += weights[i] * f(mid + half * nodes[i]);
    }
    return half * sum;
  }
};

/// Nodes and weights by Newton iteration on P_n. Throws DomainError for n = 0.
GaussLegendreRule gauss_legendre(std::size_t n);

} // namespace wabl
