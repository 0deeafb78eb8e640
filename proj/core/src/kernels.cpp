#include "sgi/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "sgi/constants.hpp"
#include "sgi/errors.hpp"

namespace sgi {

namespace {

// x / tanh(x), with the removable singularity at 0.
double x_coth_x(double x) {
  if (std::abs(x) < 1e-4) return 1.0 + x * x / 3.0;
  return x / std::tanh(x);
}

int oscillation_panels(double omega_max, double s, int minimum) {
  // At least one panel per half period of cos(omega s).
  const double half_periods = std::ceil(omega_max * std::abs(s) / constants::pi);
  return std::max(minimum, static_cast<int>(std::min(half_periods, 1e6)));
}

}  // namespace

SpectralFunction SpectralFunction::sharp_cutoff(double friction, double cutoff) {
  return {SpectralKind::SharpCutoffOhmic, friction, cutoff, 0.0};
}

SpectralFunction SpectralFunction::effective_squid(double friction, double cutoff,
                                                   double cutoff2) {
  return {SpectralKind::EffectiveSquid, friction, cutoff, cutoff2};
}

double SpectralFunction::max_frequency() const {
  if (kind == SpectralKind::SharpCutoffOhmic) return cutoff;
  return 20.0 * std::min(cutoff, cutoff2);
}

double SpectralFunction::shape(double omega) const {
  if (kind == SpectralKind::SharpCutoffOhmic) return omega <= cutoff ? 1.0 : 0.0;
  const double r1 = omega / cutoff;
  const double r2 = omega / cutoff2;
  return 1.0 / (1.0 + r1 * r1 + (r2 * r2) * (r2 * r2));
}

void validate(const SpectralFunction& sf) {
  if (!(sf.friction >= 0)) throw ParameterError("spectral function: friction must be >= 0");
  if (!(sf.cutoff > 0)) throw ParameterError("spectral function: cutoff must be > 0");
  if (sf.kind == SpectralKind::EffectiveSquid && !(sf.cutoff2 > 0)) {
    throw ParameterError("spectral function: cutoff2 must be > 0");
  }
}

double j_eval(const SpectralFunction& sf, double omega) {
  if (!(omega >= 0)) throw ParameterError("j_eval: omega must be >= 0");
  return sf.friction * omega * sf.shape(omega);
}

double noise_kernel(const SpectralFunction& sf, double s, double temperature,
                    const QuadratureSpec& q) {
  validate(sf);
  if (!(temperature > 0)) throw ParameterError("noise_kernel: temperature must be > 0");
  if (!std::isfinite(s)) throw ParameterError("noise_kernel: s must be finite");
  if (sf.friction == 0) return 0.0;

  const double thermal = 2.0 * constants::boltzmann * temperature / constants::hbar;
  // J coth(hbar w / 2kT) = eta (2kT/hbar) x coth x with x = hbar w / 2kT; finite at w = 0.
  auto integrand = [&](double w) {
    return sf.friction * thermal * x_coth_x(w / thermal) * sf.shape(w) * std::cos(w * s);
  };
  QuadratureSpec local = q;
  const double w_max = sf.max_frequency();
  local.panel_count = oscillation_panels(w_max, s, q.panel_count);
  // Near a zero of alpha_R(s) a purely relative target sits below round-off;
  // the floor is measured against a thousandth of the s = 0 scale instead.
  local.absolute_floor =
      std::max(q.absolute_floor, q.relative_tolerance * 1e-3 * sf.friction * thermal * w_max);
  const QuadratureResult r = integrate_1d(integrand, 0.0, w_max, local);
  return r.value / constants::pi;
}

double noise_kernel_high_t_weight(const SpectralFunction& sf, double temperature) {
  if (!(temperature > 0)) throw ParameterError("noise weight: temperature must be > 0");
  return 2.0 * sf.friction * constants::boltzmann * temperature / constants::hbar;
}

double high_temperature_margin(double temperature, double damping_rate) {
  if (damping_rate <= 0) return std::numeric_limits<double>::infinity();
  return constants::boltzmann * temperature / (constants::hbar * damping_rate);
}

double damping_kernel(const SpectralFunction& sf, double t, double mass,
                      const QuadratureSpec& q) {
  validate(sf);
  if (!(t >= 0)) throw ParameterError("damping_kernel: t must be >= 0");
  if (!(mass > 0)) throw ParameterError("damping_kernel: mass must be > 0");
  if (sf.friction == 0) return 0.0;
  auto integrand = [&](double w) { return sf.friction * sf.shape(w) * std::cos(w * t); };
  QuadratureSpec local = q;
  const double w_max = sf.max_frequency();
  local.panel_count = oscillation_panels(w_max, t, q.panel_count);
  local.absolute_floor =
      std::max(q.absolute_floor, q.relative_tolerance * 1e-3 * sf.friction * w_max);
  const QuadratureResult r = integrate_1d(integrand, 0.0, w_max, local);
  return 2.0 * r.value / (mass * constants::pi);
}

NoiseKernelTable::NoiseKernelTable(const SpectralFunction& sf, double temperature, double span,
                                   int grid_points, const QuadratureSpec& q)
    : span_(span) {
  if (!(span > 0)) throw ParameterError("NoiseKernelTable: span must be > 0");
  if (grid_points < 4) throw ParameterError("NoiseKernelTable: need at least 4 grid points");
  step_ = span / (grid_points - 1);
  values_.resize(static_cast<std::size_t>(grid_points) + 2);
  // Two guard points past the end keep the cubic stencil inside the table.
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] = noise_kernel(sf, step_ * static_cast<double>(i), temperature, q);
  }
}

double NoiseKernelTable::operator()(double s) const {
  const double x = std::abs(s) / step_;
  if (x > static_cast<double>(values_.size() - 2)) {
    throw ParameterError("NoiseKernelTable: lag outside tabulated span");
  }
  long i = static_cast<long>(x);
  const long last = static_cast<long>(values_.size()) - 3;
  i = std::clamp(i, 1L, last);
  const double u = x - static_cast<double>(i);
  // Four-point Lagrange cubic on nodes i-1, i, i+1, i+2; alpha_R is even so
  // values_[-1] = values_[1].
  const double fm = values_[static_cast<std::size_t>(i - 1)];
  const double f0 = values_[static_cast<std::size_t>(i)];
  const double f1 = values_[static_cast<std::size_t>(i + 1)];
  const double f2 = values_[static_cast<std::size_t>(i + 2)];
  const double wm = -u * (u - 1.0) * (u - 2.0) / 6.0;
  const double w0 = (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0;
  const double w1 = -(u + 1.0) * u * (u - 2.0) / 2.0;
  const double w2 = (u + 1.0) * u * (u - 1.0) / 6.0;
  return wm * fm + w0 * f0 + w1 * f1 + w2 * f2;
}

}  // namespace sgi
