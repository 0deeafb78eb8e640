#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sgi/errors.hpp"

namespace sgi {

struct QuadratureSpec {
  int node_count = 16;
  int panel_count = 8;
  double relative_tolerance = 1e-10;
  /// Absolute error floor for results that are (close to) zero.
  double absolute_floor = 0.0;
  int max_panels = 1 << 18;
};

void validate(const QuadratureSpec& q);

struct QuadratureResult {
  double value = 0;
  double error = 0;
  std::size_t evaluations = 0;
  std::size_t panels = 0;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendreRule {
 public:
  explicit GaussLegendreRule(int node_count);

  int size() const { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  /// Returns {sum w f, sum w |f|} mapped onto [lo, hi].
  template <class F>
  std::pair<double, double> apply(F& f, double lo, double hi) const {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double sum = 0;
    double abs_sum = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const double v = f(mid + half * nodes_[i]);
      sum += weights_[i] * v;
      abs_sum += weights_[i] * std::abs(v);
    }
    return {half * sum, std::abs(half) * abs_sum};
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Panel-adaptive Gauss-Legendre quadrature.
///
/// [a, b] is cut into QuadratureSpec::panel_count panels. Every panel is
/// compared against the sum over its two halves; a panel is accepted once
/// the difference is below its share of relative_tolerance * scale, where
/// scale is the larger of the first-pass |integral|, the absolute floor, and
/// a round-off floor proportional to the integral of |f|. Otherwise it is
/// split. Running out of max_panels throws NumericalError carrying the
/// achieved error estimate; nothing is truncated silently.
template <class F>
QuadratureResult integrate_1d(F&& f, double a, double b, const QuadratureSpec& q,
                              const GaussLegendreRule& rule, int initial_panels = 0) {
  QuadratureResult result;
  if (a == b) return result;
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw ParameterError("integrate_1d: bounds must be finite");
  }
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }

  struct Panel {
    double lo, hi, coarse;
  };
  const int n0 = std::max({q.panel_count, std::min(initial_panels, q.max_panels / 4), 1});
  const double width = b - a;
  const std::size_t per_rule = static_cast<std::size_t>(rule.size());

  std::vector<Panel> stack;
  stack.reserve(64);
  double first_pass = 0;
  double first_pass_abs = 0;
  for (int i = n0 - 1; i >= 0; --i) {
    const double lo = a + width * i / n0;
    const double hi = (i == n0 - 1) ? b : a + width * (i + 1) / n0;
    const auto [v, av] = rule.apply(f, lo, hi);
    first_pass += v;
    first_pass_abs += av;
    stack.push_back({lo, hi, v});
  }
  result.evaluations += per_rule * n0;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double scale =
      std::max({std::abs(first_pass), q.absolute_floor / q.relative_tolerance,
                64.0 * eps * first_pass_abs / q.relative_tolerance});
  const double budget = q.relative_tolerance * scale;
  const double min_width = 1e-13 * width;

  std::size_t panels = stack.size();
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.lo + p.hi);
    const double left = rule.apply(f, p.lo, mid).first;
    const double right = rule.apply(f, mid, p.hi).first;
    result.evaluations += 2 * per_rule;
    const double fine = left + right;
    const double err = std::abs(fine - p.coarse);
    const double share = budget * (p.hi - p.lo) / width;
    if (err <= share || (p.hi - p.lo) < min_width) {
      result.value += fine;
      result.error += err;
      ++result.panels;
      continue;
    }
    panels += 1;
    if (panels > static_cast<std::size_t>(q.max_panels)) {
      // Relative error achieved so far; a lower bound since pending panels are unchecked.
      const double achieved = (result.error + err) / scale;
      throw NumericalError("integrate_1d: panel budget exhausted before reaching tolerance " +
                               std::to_string(q.relative_tolerance),
                           achieved);
    }
    stack.push_back({mid, p.hi, right});
    stack.push_back({p.lo, mid, left});
  }
  result.value *= sign;
  return result;
}

template <class F>
QuadratureResult integrate_1d(F&& f, double a, double b, const QuadratureSpec& q) {
  validate(q);
  const GaussLegendreRule rule(q.node_count);
  return integrate_1d(std::forward<F>(f), a, b, q, rule);
}

/// Region x in [x_lo, x_hi], y in [y_lo(x), y_hi(x)].
struct Domain2D {
  double x_lo = 0;
  double x_hi = 0;
  std::function<double(double)> y_lo;
  std::function<double(double)> y_hi;
  /// Optional: minimum number of starting panels for the inner integral at x.
  std::function<int(double)> y_panels;

  static Domain2D rectangle(double x0, double x1, double y0, double y1) {
    return {x0, x1, [y0](double) { return y0; }, [y1](double) { return y1; }, {}};
  }
};

/// Iterated adaptive quadrature: the inner y-integral is itself adaptive.
/// The reported error adds the outer estimate and (x-width) * worst inner error.
template <class F>
QuadratureResult integrate_2d(F&& f, const Domain2D& domain, const QuadratureSpec& q) {
  validate(q);
  const GaussLegendreRule rule(q.node_count);
  double worst_inner = 0;
  std::size_t inner_evals = 0;
  auto outer = [&](double x) {
    auto slice = [&](double y) { return f(x, y); };
    const int hint = domain.y_panels ? domain.y_panels(x) : 0;
    const QuadratureResult inner =
        integrate_1d(slice, domain.y_lo(x), domain.y_hi(x), q, rule, hint);
    worst_inner = std::max(worst_inner, inner.error);
    inner_evals += inner.evaluations;
    return inner.value;
  };
  QuadratureResult r = integrate_1d(outer, domain.x_lo, domain.x_hi, q, rule);
  r.error += std::abs(domain.x_hi - domain.x_lo) * worst_inner;
  r.evaluations = inner_evals;
  return r;
}

}  // namespace sgi
