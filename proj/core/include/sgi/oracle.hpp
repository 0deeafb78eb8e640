#pragma once

#include <complex>
#include <vector>

#include "sgi/force_profile.hpp"
#include "sgi/kernels.hpp"
#include "sgi/propagator.hpp"

// Brute-force references. Nothing here calls into the propagator, density
// or quadrature code it is meant to check; only the plain data types are shared.
namespace sgi::oracle {

struct Trajectory {
  std::vector<double> times;
  std::vector<double> position;
  std::vector<double> velocity;
};

/// RK4 for m z'' = f0(t) - 2 m gamma z', started at rest at the origin.
/// Steps are fitted inside every force segment (none larger than dt) so the
/// right-hand side is smooth within each step.
Trajectory classical_trajectory_rk4(const ForceProfile& fp, double mass, double gamma, double dt);

/// Overlap <psi_-(t)|psi_+(t)> of the two spin branches without any bath.
/// Each branch is a Gaussian with the free complex width, moved along its
/// classical path in the linear potential -+ f0(t) z, carrying its action phase.
std::complex<double> noiseless_evolution(const ForceProfile& fp, double mass, double sigma,
                                         double t);

struct NoiseIntegrals {
  double a = 0;
  double b = 0;
  double c = 0;
};

/// Trapezoid rule on an n x n uniform grid over [0, t]^2 using the
/// sinh/exp weights as written. alpha_R is evaluated exactly (by its own
/// composite Simpson rule) for each of the n distinct grid lags.
NoiseIntegrals brute_force_abc(double t, double gamma, double temperature,
                               const SpectralFunction& sf, int n = 2000);

/// alpha_R(s) by composite Simpson in omega; used by brute_force_abc.
double noise_kernel_simpson(const SpectralFunction& sf, double s, double temperature);

struct TraceResult {
  std::complex<double> value;
  double truncation = 0;  // Gaussian weight outside the integration window
  // Round-off floor of the sum: the integrand oscillates, so values far
  // below 1e3 eps int |f| are not resolved.
  double resolution = 0;
};

/// int rho_od(q, 0, t) dq with rho_od written term by term, by Simpson's rule
/// on a window of +-12 widths of the q-Gaussian. The interval count is raised
/// to keep 16 points per turn of the phase.
TraceResult trace_offdiag_numeric(const CoeffSet& c, double sigma, int intervals = 4000);

}  // namespace sgi::oracle
