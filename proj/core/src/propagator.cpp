#include "sgi/propagator.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "sgi/constants.hpp"
#include "sgi/errors.hpp"
#include "sgi/series.hpp"

namespace sgi {

namespace {

void require_time(double t, const char* who) {
  if (!(t > 0) || !std::isfinite(t)) throw ParameterError(std::string(who) + ": t must be > 0");
}

void require_gamma(double gamma, const char* who) {
  if (!(gamma >= 0) || !std::isfinite(gamma)) {
    throw ParameterError(std::string(who) + ": gamma must be finite and >= 0");
  }
}

// Four-point cubics at 8 points per cycle of the top frequency reproduce
// alpha_R to about 2e-6 of alpha_R(0); tighter 2-D targets only chase the
// stencil joints.
constexpr double kKernelTableAccuracy = 1e-6;
// Below this gamma t the noise shape functions use their Taylor series.
constexpr double kNoiseSeriesSwitch = 0.1;

double horner(const double* c, int n, double x) {
  double sum = 0;
  for (int k = n - 1; k >= 0; --k) sum = sum * x + c[k];
  return sum;
}

// A / (w t), B / (w t), C / (w t) as functions of x = gamma t.
std::array<double, 3> noise_shape(double x) {
  if (x < kNoiseSeriesSwitch) {
    static constexpr double ca[] = {1.0 / 3,       -1.0 / 6,      1.0 / 45,
                                    1.0 / 90,      -1.0 / 315,    -1.0 / 945,
                                    2.0 / 4725,    1.0 / 9450,    -1.0 / 18711,
                                    -1.0 / 93555,  1382.0 / 212837625.0,
                                    691.0 / 638512875.0, -2.0 / 2606175};
    static constexpr double cb[] = {1.0 / 6, 0, -1.0 / 45, 0, 1.0 / 315, 0, -2.0 / 4725,
                                    0,       1.0 / 18711, 0, -1382.0 / 212837625.0, 0,
                                    2.0 / 2606175};
    // The initial-coordinate shape is the final-coordinate one at -x.
    return {horner(ca, 13, x), horner(cb, 13, x), horner(ca, 13, -x)};
  }
  const double e2 = std::exp(-2.0 * x);
  const double e4 = e2 * e2;
  const double one_minus = -std::expm1(-2.0 * x);
  const double denom = x * one_minus * one_minus;
  const double fa = (0.25 * (1.0 - e4) - e2 + e4 * (1.0 + x)) / denom;
  const double fb = (0.5 * (1.0 - e4) - 2.0 * x * e2) / (2.0 * denom);
  const double fc = (x - 1.0 + e2 + 0.25 * (1.0 - e4)) / denom;
  return {fa, fb, fc};
}

// s^2 phi2(-2 gamma s): (1/2 gamma) int_0^s (1 - e^{-2 gamma u}) du.
double damped_moment(double s, double gamma) { return s * s * series::phi2(-2.0 * gamma * s); }

// s^2 phi2(+2 gamma s): (1/2 gamma) int_0^s (e^{2 gamma u} - 1) du.
double growing_moment(double s, double gamma) { return s * s * series::phi2(2.0 * gamma * s); }

}  // namespace

CouplingTerms coeff_l_n_m(double t, double mass, double gamma) {
  require_time(t, "coeff_l_n_m");
  require_gamma(gamma, "coeff_l_n_m");
  const double x = gamma * t;
  const double free = mass / t;
  CouplingTerms c;
  // e^{-x}/sinh x = coth x - 1 = 2 / (e^{2x} - 1), e^{x}/sinh x = coth x + 1.
  // Writing coth x - 1 out directly loses every digit once tanh x rounds to 1.
  c.decay = free / series::phi1(2.0 * x);
  c.growth = free / series::phi1(-2.0 * x);
  c.minus = c.decay;
  c.plus = c.growth;
  return c;
}

ForceTerms coeff_x_z(const ForceProfile& fp, double t, double gamma) {
  require_time(t, "coeff_x_z");
  require_gamma(gamma, "coeff_x_z");
  if (t > fp.total_time() * (1.0 + 1e-14)) {
    throw ParameterError("coeff_x_z: t lies outside the force profile");
  }
  const double x2 = 2.0 * gamma * t;
  double z_sum = 0;
  double x_sum = 0;
  double impulse = 0;
  for (const ForceSegment& s : fp.segments()) {
    if (s.t_start >= t) break;
    const double hi = std::min(s.t_end, t);
    z_sum += s.force * (damped_moment(t - s.t_start, gamma) - damped_moment(t - hi, gamma));
    impulse += s.force * (hi - s.t_start);
    if (x2 <= 1.0) {
      x_sum += s.force * (growing_moment(hi, gamma) - growing_moment(s.t_start, gamma));
    }
  }
  ForceTerms f;
  f.initial_term = z_sum / (t * series::phi1(-x2));
  // X + Z equals the impulse delivered up to t; use it where e^{2 gamma t} would dominate.
  f.final_term = x2 <= 1.0 ? x_sum / (t * series::phi1(x2)) : impulse - f.initial_term;
  return f;
}

NoiseTerms coeff_abc_high_t(double t, double gamma, double weight) {
  require_time(t, "coeff_abc_high_t");
  require_gamma(gamma, "coeff_abc_high_t");
  if (weight == 0) return {};
  const auto shape = noise_shape(gamma * t);
  const double scale = weight * t;
  return {scale * shape[0], scale * shape[1], scale * shape[2]};
}

double final_path_weight(double s, double t, double gamma) {
  const double x = 2.0 * gamma * t;
  if (x <= 1.0) return s * series::phi1(2.0 * gamma * s) / (t * series::phi1(x));
  // Scaled by e^{-2 gamma t} to stay finite.
  return std::exp(2.0 * gamma * (s - t)) * (-std::expm1(-2.0 * gamma * s)) / (-std::expm1(-x));
}

NoiseTerms coeff_abc_quadrature(double t, double gamma, const NoiseKernelTable& kernel,
                                double max_frequency, const QuadratureSpec& q) {
  require_time(t, "coeff_abc_quadrature");
  require_gamma(gamma, "coeff_abc_quadrature");
  if (kernel.span() < t * (1.0 - 1e-12)) {
    throw ParameterError("coeff_abc_quadrature: kernel table shorter than t");
  }
  // Integrate over the triangle t'' <= t' and symmetrise, which puts the
  // kernel ridge t' = t'' on the inner upper limit.
  Domain2D triangle{0.0, t, [](double) { return 0.0; }, [](double x) { return x; },
                    [&](double x) {
                      return static_cast<int>(std::ceil(max_frequency * x / constants::pi));
                    }};
  auto u = [&](double s) { return final_path_weight(s, t, gamma); };
  validate(q);
  QuadratureSpec local = q;
  local.relative_tolerance = std::max(q.relative_tolerance, kKernelTableAccuracy);

  const QuadratureResult a = integrate_2d(
      [&](double x, double y) { return 2.0 * u(x) * u(y) * kernel(x - y); }, triangle, local);
  const QuadratureResult b = integrate_2d(
      [&](double x, double y) {
        const double ux = u(x);
        const double uy = u(y);
        return (ux * (1.0 - uy) + uy * (1.0 - ux)) * kernel(x - y);
      },
      triangle, local);
  const QuadratureResult c = integrate_2d(
      [&](double x, double y) { return 2.0 * (1.0 - u(x)) * (1.0 - u(y)) * kernel(x - y); },
      triangle, local);
  return {a.value, b.value, c.value};
}

NoiseTerms coeff_abc_quadrature(double t, double gamma, double temperature,
                                const SpectralFunction& sf, const QuadratureSpec& q,
                                int grid_points) {
  const NoiseModel model = NoiseModel::quadrature_kernel(sf, temperature, t, grid_points, q);
  return coeff_abc_quadrature(t, gamma, *model.kernel, model.max_frequency, q);
}

double prefactor_g(double t, double mass, double gamma) {
  require_time(t, "prefactor_g");
  require_gamma(gamma, "prefactor_g");
  return mass / (t * series::phi1(-2.0 * gamma * t)) / (2.0 * constants::pi * constants::hbar);
}

NoiseModel NoiseModel::high_temperature(double weight) {
  if (!(weight >= 0)) throw ParameterError("noise weight must be >= 0");
  NoiseModel m;
  m.kind = Kind::HighTemperature;
  m.weight = weight;
  return m;
}

NoiseModel NoiseModel::quadrature_kernel(const SpectralFunction& sf, double temperature,
                                         double span, int grid_points, const QuadratureSpec& q) {
  validate(sf);
  NoiseModel m;
  m.kind = Kind::Quadrature;
  m.max_frequency = sf.max_frequency();
  m.quadrature = q;
  const double needed = std::ceil(8.0 * m.max_frequency * span) + 1.0;
  const int points = static_cast<int>(std::max<double>(grid_points, std::min(needed, 4e6)));
  m.kernel = std::make_shared<const NoiseKernelTable>(sf, temperature, span, points, q);
  return m;
}

NoiseTerms noise_terms(const NoiseModel& model, double t, double gamma) {
  switch (model.kind) {
    case NoiseModel::Kind::None:
      return {};
    case NoiseModel::Kind::HighTemperature:
      return coeff_abc_high_t(t, gamma, model.weight);
    case NoiseModel::Kind::Quadrature:
      return coeff_abc_quadrature(t, gamma, *model.kernel, model.max_frequency, model.quadrature);
  }
  return {};
}

CoeffSet make_coeff_set(double t, double mass, double gamma, const ForceProfile& fp,
                        const NoiseModel& noise) {
  CoeffSet c = make_coeff_set(t, mass, gamma, noise);
  const ForceTerms xz = coeff_x_z(fp, t, gamma);
  c.force_final = xz.final_term;
  c.force_initial = xz.initial_term;
  return c;
}

CoeffSet make_coeff_set(double t, double mass, double gamma, const NoiseModel& noise) {
  if (!(mass > 0)) throw ParameterError("make_coeff_set: mass must be > 0");
  const CouplingTerms lnm = coeff_l_n_m(t, mass, gamma);
  const NoiseTerms abc = noise_terms(noise, t, gamma);
  CoeffSet c;
  c.t = t;
  c.noise_final = abc.final_term;
  c.noise_cross = abc.cross_term;
  c.noise_initial = abc.initial_term;
  c.coupling_plus = lnm.plus;
  c.coupling_minus = lnm.minus;
  c.cross_decay = lnm.decay;
  c.cross_growth = lnm.growth;
  c.normalization = prefactor_g(t, mass, gamma);
  return c;
}

}  // namespace sgi
