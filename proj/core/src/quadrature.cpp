#include "sgi/quadrature.hpp"

#include <cmath>

#include "sgi/constants.hpp"

namespace sgi {

void validate(const QuadratureSpec& q) {
  if (q.node_count < 2) throw ParameterError("quadrature node_count must be >= 2");
  if (q.panel_count < 1) throw ParameterError("quadrature panel_count must be >= 1");
  if (!(q.relative_tolerance > 0) || q.relative_tolerance > 1e-2) {
    throw ParameterError("quadrature relative_tolerance must lie in (0, 1e-2]");
  }
  if (!(q.absolute_floor >= 0)) throw ParameterError("quadrature absolute_floor must be >= 0");
  if (q.max_panels < q.panel_count) throw ParameterError("quadrature max_panels < panel_count");
}

GaussLegendreRule::GaussLegendreRule(int n) : nodes_(n), weights_(n) {
  if (n < 2) throw ParameterError("Gauss-Legendre rule needs at least 2 nodes");
  // Newton iteration on P_n starting from the Chebyshev-like guess; nodes are
  // symmetric so only half are computed.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes_[i] = -x;
    nodes_[n - 1 - i] = x;
    weights_[i] = w;
    weights_[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes_[n / 2] = 0.0;
}

}  // namespace sgi
