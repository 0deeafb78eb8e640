#pragma once

#include <vector>

#include "sgi/quadrature.hpp"

namespace sgi {

enum class SpectralKind { SharpCutoffOhmic, EffectiveSquid };

/// Bath spectral density J(omega).
struct SpectralFunction {
  SpectralKind kind = SpectralKind::SharpCutoffOhmic;
  double friction = 0;  // eta [kg/s]
  double cutoff = 0;    // Omega [rad/s]
  double cutoff2 = 0;   // Omega' [rad/s], EffectiveSquid only

  static SpectralFunction sharp_cutoff(double friction, double cutoff);
  static SpectralFunction effective_squid(double friction, double cutoff, double cutoff2);

  /// Upper limit of frequency quadratures. The EffectiveSquid tail falls off
  /// as omega^-3 past max(Omega, Omega'), so truncating at 20 min(Omega, Omega')
  /// drops a fraction of order (min/max)^-1 (1/20)^2 of the total weight.
  double max_frequency() const;

  /// J(omega) / (eta omega): 1 below the cutoff for the sharp kind, the
  /// Lorentzian-like roll-off for the SQUID kind.
  double shape(double omega) const;
};

void validate(const SpectralFunction& sf);

double j_eval(const SpectralFunction& sf, double omega);

/// alpha_R(s) = (1/pi) int_0^inf J(w) coth(hbar w / 2kT) cos(w s) dw.
double noise_kernel(const SpectralFunction& sf, double s, double temperature,
                    const QuadratureSpec& q = {});

/// Weight of the delta function alpha_R(s) -> w delta(s) at high temperature: 2 eta k T / hbar.
double noise_kernel_high_t_weight(const SpectralFunction& sf, double temperature);

/// k T / (hbar gamma); the delta-kernel collapse needs this well above one.
double high_temperature_margin(double temperature, double damping_rate);

/// gamma(t) = (2 / m pi) int_0^inf J(w)/w cos(w t) dw.
double damping_kernel(const SpectralFunction& sf, double t, double mass,
                      const QuadratureSpec& q = {});

/// alpha_R tabulated on a uniform grid over [0, span] and interpolated with
/// four-point cubics; evenness extends it to [-span, span].
class NoiseKernelTable {
 public:
  NoiseKernelTable(const SpectralFunction& sf, double temperature, double span,
                   int grid_points, const QuadratureSpec& q = {});

  double operator()(double s) const;
  double span() const { return span_; }
  int size() const { return static_cast<int>(values_.size()); }

 private:
  double span_;
  double step_;
  std::vector<double> values_;
};

}  // namespace sgi
