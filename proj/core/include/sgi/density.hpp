#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "sgi/force_profile.hpp"
#include "sgi/propagator.hpp"

namespace sgi {

using complex = std::complex<double>;

/// exp(log_prefactor + c_qq q^2 + c_xx xi^2 + c_qx q xi + c_q q + c_x xi).
/// Everything stays in log space until the final exponentiation.
struct GaussianBlock {
  complex c_qq;
  complex c_xx;
  complex c_qx;
  complex c_q;
  complex c_x;
  complex log_prefactor;

  complex log_value(double q, double xi) const;
  complex value(double q, double xi) const { return std::exp(log_value(q, xi)); }

  /// Closed-form int dq at fixed xi; needs Re c_qq < 0.
  complex integral_over_q(double xi) const;
};

/// a(t) [m^-2].
double a_of_t(const CoeffSet& c, double sigma);

/// a'(t) [m^-2], rearranged so that no large terms cancel at small t or gamma.
double a_prime(const CoeffSet& c, double sigma);

/// a'(t) term by term as it is usually printed; loses digits when
/// sigma L+ >> hbar / sigma. Kept for cross-checks.
double a_prime_direct(const CoeffSet& c, double sigma);

/// Diagonal spin block; spin_sign = +1 for the upper sign.
GaussianBlock diagonal_block(const CoeffSet& c, double sigma, int spin_sign);

/// Off-diagonal spin block; branch = +1 for the upper sign. The other
/// off-diagonal block is its complex conjugate.
GaussianBlock offdiagonal_block(const CoeffSet& c, double sigma, int branch);

complex rho_diagonal(double q, double xi, const CoeffSet& c, double sigma, int spin_sign);
complex rho_offdiagonal(double q, double xi, const CoeffSet& c, double sigma, int branch);

/// Centre of the upper-spin packet, (1/2 m gamma) int_0^t f0(t') (1 - e^{-2 gamma (t - t')}) dt'.
double packet_center(const ForceProfile& fp, double t, double mass, double gamma);

/// sigma_tilde = hbar sqrt(2 a) / M.
double packet_width(const CoeffSet& c, double sigma);

/// M / (2 hbar sqrt(a a')); throws RegimeError when a' <= 0.
double h_factor(const CoeffSet& c, double sigma);

enum class CoherenceMode { ClosedFormHighT, TraceIntegral };

/// |trace of the off-diagonal block| relative to t = 0 (where it is 1).
/// Passing a CoeffSet with t = 0 returns 1.
double coherence(const CoeffSet& c, double sigma, CoherenceMode mode,
                 const QuadratureSpec& q = {});

/// The Gaussian-overlap term of the closed form: the packets sit at +-dz
/// with dz = Z / M, giving -(dz / sigma_tilde)^2 / 2.
double overlap_exponent(const CoeffSet& c, double sigma);

/// <S_x>(t) / <S_x>(0) for an initial |+>_x spin state.
double sx_expectation(const CoeffSet& c, double sigma);

struct CoherenceTrace {
  std::vector<double> times;
  std::vector<double> z_plus;
  std::vector<double> z_minus;
  std::vector<double> width;
  std::vector<double> h;
  std::vector<double> coherence;
  std::vector<double> sx;
  std::optional<double> decoherence_time;
};

struct DecoherenceSearch {
  double t_max = 1e9;    // [s]
  double t_min = 0;      // first grid point; 0 means t_max * 1e-12
  int grid_points = 241;
  double relative_tolerance = 1e-10;
};

/// First time h(t) <= 1/e on a log-spaced grid, refined by bisection.
/// Returns nullopt when h stays above 1/e up to t_max.
std::optional<double> decoherence_time(double mass, double gamma, double sigma,
                                       const NoiseModel& noise,
                                       const DecoherenceSearch& search = {});

}  // namespace sgi
