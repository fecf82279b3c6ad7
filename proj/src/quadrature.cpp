#include "wabl/quadrature.hpp"

#include "wabl/errors.hpp"

#include <cmath>
#include <numbers>

namespace wabl {

GaussLegendreRule gauss_legendre(std::size_t n) {
  if (n == 0) {
    throw DomainError("Gauss-Legendre rule needs at least one node");
  }
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const auto nd = static_cast<double>(n);
  // Roots are symmetric; compute the nonnegative half.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Three-term recurrence for P_n(x) and P_{n-1}(x).
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t j = 2; j <= n; ++j) {
        const auto jd = static_cast<double>(j);
        const double p2 = ((2.0 * jd - 1.0) * x * p1 - (jd - 1.0) * p0) / jd;
        p0 = p1;
        p1 = p2;
      }
      const double pn = n == 1 ? x : p1;
      const double pn_1 = n == 1 ? 1.0 : p0;
      dp = nd * (x * pn - pn_1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16) {
        break;
      }
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t j = 2; j <= n; ++j) {
      const auto jd = static_cast<double>(j);
      const double p2 = ((2.0 * jd - 1.0) * x * p1 - (jd - 1.0) * p0) / jd;
      p0 = p1;
      p1 = p2;
    }
    const double pn = n == 1 ? x : p1;
    const double pn_1 = n == 1 ? 1.0 : p0;
    dp = nd * (x * pn - pn_1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);

    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[n / 2] = 0.0;
  }
  return rule;
}

} // namespace wabl
