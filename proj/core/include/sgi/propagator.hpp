#pragma once

#include <memory>

#include "sgi/force_profile.hpp"
#include "sgi/kernels.hpp"
#include "sgi/quadrature.hpp"

namespace sgi {

/// The time-dependent coefficients of the dissipative propagator at time t.
///
/// Conventional symbols in brackets. All are evaluated for a damping rate
/// gamma >= 0; gamma = 0 gives the free-particle limits.
struct CoeffSet {
  double t = 0;
  double noise_final = 0;     // [A]  weight of the final-coordinate noise
  double noise_cross = 0;     // [B]  final/initial cross weight
  double noise_initial = 0;   // [C]  weight of the initial-coordinate noise
  double coupling_plus = 0;   // [L+] m gamma (coth gamma t + 1)
  double coupling_minus = 0;  // [L-] m gamma (coth gamma t - 1)
  double cross_decay = 0;     // [N]  m gamma e^{-gamma t} / sinh gamma t
  double cross_growth = 0;    // [M]  m gamma e^{+gamma t} / sinh gamma t
  double force_final = 0;     // [X]
  double force_initial = 0;   // [Z]
  double normalization = 0;   // [G]  m gamma e^{gamma t} / (2 pi hbar sinh gamma t)
};

struct CouplingTerms {
  double plus = 0;
  double minus = 0;
  double decay = 0;
  double growth = 0;
};

struct ForceTerms {
  double final_term = 0;    // X
  double initial_term = 0;  // Z
};

struct NoiseTerms {
  double final_term = 0;    // A
  double cross_term = 0;    // B
  double initial_term = 0;  // C
};

CouplingTerms coeff_l_n_m(double t, double mass, double gamma);

/// Closed-form segment sums; t must lie in (0, T_exp].
ForceTerms coeff_x_z(const ForceProfile& fp, double t, double gamma);

/// Noise coefficients with alpha_R collapsed to weight * delta(t' - t'').
/// They satisfy A + 2B + C = weight * t exactly.
NoiseTerms coeff_abc_high_t(double t, double gamma, double weight);

/// Noise coefficients as full double integrals over [0, t]^2 against the
/// tabulated kernel (the table must span at least t). The relative tolerance
/// is raised to 1e-6 if set tighter: that is the accuracy of the table itself.
NoiseTerms coeff_abc_quadrature(double t, double gamma, const NoiseKernelTable& kernel,
                                double max_frequency, const QuadratureSpec& q = {});

/// Convenience overload that builds the table over [0, t].
NoiseTerms coeff_abc_quadrature(double t, double gamma, double temperature,
                                const SpectralFunction& sf, const QuadratureSpec& q = {},
                                int grid_points = 4096);

double prefactor_g(double t, double mass, double gamma);

/// Share of the final coordinate in the classical path,
/// u(s) = (e^{2 gamma s} - 1) / (e^{2 gamma t} - 1); the initial share is 1 - u.
double final_path_weight(double s, double t, double gamma);

/// How the noise coefficients are produced when assembling a CoeffSet.
struct NoiseModel {
  enum class Kind { None, HighTemperature, Quadrature };
  Kind kind = Kind::None;
  double weight = 0;  // HighTemperature
  std::shared_ptr<const NoiseKernelTable> kernel;  // Quadrature
  double max_frequency = 0;                        // Quadrature
  QuadratureSpec quadrature;                       // Quadrature

  static NoiseModel none() { return {}; }
  static NoiseModel high_temperature(double weight);
  /// Tabulates alpha_R once over [0, span] for reuse at every t <= span.
  /// Grid density is raised, if needed, to at least 8 points per 1/max_frequency.
  static NoiseModel quadrature_kernel(const SpectralFunction& sf, double temperature,
                                      double span, int grid_points = 4096,
                                      const QuadratureSpec& q = {});
};

NoiseTerms noise_terms(const NoiseModel& model, double t, double gamma);

CoeffSet make_coeff_set(double t, double mass, double gamma, const ForceProfile& fp,
                        const NoiseModel& noise);

/// Same without a force (X = Z = 0); t is then not limited to the profile.
CoeffSet make_coeff_set(double t, double mass, double gamma, const NoiseModel& noise);

}  // namespace sgi
