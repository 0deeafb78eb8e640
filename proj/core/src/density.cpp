#include "sgi/density.hpp"

#include <cmath>
#include <numbers>

#include "sgi/constants.hpp"
#include "sgi/errors.hpp"
#include "sgi/series.hpp"

namespace sgi {

namespace {

using constants::hbar;

void require_sigma(double sigma) {
  if (!(sigma > 0) || !std::isfinite(sigma)) throw ParameterError("sigma must be > 0");
}

// Pieces of a(t) hbar^2 = P + c + r, kept apart so that differences
// like 1 - P / (a hbar^2) can be written as (c + r) / (a hbar^2).
struct WidthParts {
  double p;  // sigma^2 L+^2 / 2
  double c;  // hbar C / 2
  double r;  // hbar^2 / (8 sigma^2)
  double sum() const { return p + c + r; }
};

WidthParts width_parts(const CoeffSet& c, double sigma) {
  require_sigma(sigma);
  return {0.5 * sigma * sigma * c.coupling_plus * c.coupling_plus, 0.5 * hbar * c.noise_initial,
          hbar * hbar / (8.0 * sigma * sigma)};
}

// hbar^4 a a', a sum of non-negative terms for a positive noise kernel.
double a_a_prime_scaled(const CoeffSet& c, double sigma) {
  const WidthParts w = width_parts(c, sigma);
  const double s2 = sigma * sigma;
  const double n = c.cross_decay;
  const double na = c.noise_final, nb = c.noise_cross, nc = c.noise_initial;
  return 2.0 * s2 * n * n * (w.c + w.r) + 2.0 * hbar * na * (w.p + w.r) +
         hbar * hbar * (na * nc - nb * nb) + 2.0 * hbar * s2 * n * c.coupling_plus * nb;
}

// (hbar B - sigma^2 N L+) / (2 a hbar^2)
double mixing(const CoeffSet& c, double sigma, const WidthParts& w) {
  return (hbar * c.noise_cross - sigma * sigma * c.cross_decay * c.coupling_plus) / (2.0 * w.sum());
}

}  // namespace

complex GaussianBlock::log_value(double q, double xi) const {
  return log_prefactor + c_qq * (q * q) + c_xx * (xi * xi) + c_qx * (q * xi) + c_q * q + c_x * xi;
}

complex GaussianBlock::integral_over_q(double xi) const {
  const complex alpha = -c_qq;
  if (!(alpha.real() > 0)) throw RegimeError("Gaussian block is not normalisable in q");
  const complex b = c_qx * xi + c_q;
  const complex rest = log_prefactor + c_xx * (xi * xi) + c_x * xi;
  return std::sqrt(std::numbers::pi / alpha) * std::exp(b * b / (4.0 * alpha) + rest);
}

double a_of_t(const CoeffSet& c, double sigma) {
  return width_parts(c, sigma).sum() / (hbar * hbar);
}

double a_prime(const CoeffSet& c, double sigma) {
  const WidthParts w = width_parts(c, sigma);
  return a_a_prime_scaled(c, sigma) / (hbar * hbar * w.sum());
}

double a_prime_direct(const CoeffSet& c, double sigma) {
  require_sigma(sigma);
  const double a = a_of_t(c, sigma);
  const double s2 = sigma * sigma;
  const double lp = c.coupling_plus, n = c.cross_decay, b = c.noise_cross;
  return 2.0 * s2 * n * n / (hbar * hbar) * (1.0 - s2 * lp * lp / (2.0 * a * hbar * hbar)) -
         2.0 / hbar * (b * b / (2.0 * a * hbar) - c.noise_final) +
         2.0 * s2 * lp * n * b / (a * hbar * hbar * hbar);
}

GaussianBlock diagonal_block(const CoeffSet& c, double sigma, int spin_sign) {
  if (spin_sign != 1 && spin_sign != -1) throw ParameterError("spin_sign must be +1 or -1");
  const WidthParts w = width_parts(c, sigma);
  const double s = spin_sign;
  const double m = c.cross_growth;
  const double z = c.force_initial;
  const double k = -mixing(c, sigma, w);  // (sigma^2 N L+ - hbar B) / (2 a hbar^2)
  const double a = w.sum() / (hbar * hbar);
  GaussianBlock g;
  // -(M^2 / 4 a hbar^2)(q -+ Z/M)^2, expanded.
  g.c_qq = -m * m / (4.0 * w.sum());
  g.c_q = s * z * m / (2.0 * w.sum());
  // The xi^2 coefficient equals a'/4; the stable form of a' is used.
  g.c_xx = -0.25 * a_prime(c, sigma);
  g.c_qx = complex(0.0, (c.coupling_minus - m * k) / hbar);
  g.c_x = complex(0.0, s * (c.force_final + z * k) / hbar);
  g.log_prefactor = 0.5 * std::log(std::numbers::pi / a) + std::log(c.normalization) -
                    z * z / (4.0 * w.sum());
  return g;
}

GaussianBlock offdiagonal_block(const CoeffSet& c, double sigma, int branch) {
  if (branch != 1 && branch != -1) throw ParameterError("branch must be +1 or -1");
  const WidthParts w = width_parts(c, sigma);
  const double s = branch;
  const double m = c.cross_growth;
  const double z = c.force_initial;
  const double k = mixing(c, sigma, w);
  const double a = w.sum() / (hbar * hbar);
  GaussianBlock g;
  g.c_qq = -a_prime(c, sigma);
  g.c_qx = complex(0.0, (m * k + c.coupling_minus) / hbar);
  g.c_q = complex(0.0, 2.0 * s * (c.force_final - z * k) / hbar);
  // -(xi M -+ 2Z)^2 / (16 a hbar^2), expanded.
  g.c_xx = -m * m / (16.0 * w.sum());
  g.c_x = s * m * z / (4.0 * w.sum());
  g.log_prefactor = 0.5 * std::log(std::numbers::pi / a) + std::log(c.normalization) -
                    z * z / (4.0 * w.sum());
  return g;
}

complex rho_diagonal(double q, double xi, const CoeffSet& c, double sigma, int spin_sign) {
  return diagonal_block(c, sigma, spin_sign).value(q, xi);
}

complex rho_offdiagonal(double q, double xi, const CoeffSet& c, double sigma, int branch) {
  return offdiagonal_block(c, sigma, branch).value(q, xi);
}

double packet_center(const ForceProfile& fp, double t, double mass, double gamma) {
  if (!(mass > 0)) throw ParameterError("packet_center: mass must be > 0");
  if (!(gamma >= 0)) throw ParameterError("packet_center: gamma must be >= 0");
  if (!(t >= 0) || t > fp.total_time() * (1.0 + 1e-14)) {
    throw ParameterError("packet_center: t outside the force profile");
  }
  // (1/2 gamma) int_0^s (1 - e^{-2 gamma u}) du, with its gamma -> 0 limit s^2/2.
  auto moment = [gamma](double s) { return s * s * series::phi2(-2.0 * gamma * s); };
  double sum = 0;
  for (const ForceSegment& seg : fp.segments()) {
    if (seg.t_start >= t) break;
    const double hi = std::min(seg.t_end, t);
    sum += seg.force * (moment(t - seg.t_start) - moment(t - hi));
  }
  return sum / mass;
}

double packet_width(const CoeffSet& c, double sigma) {
  const double a = a_of_t(c, sigma);
  if (!(c.cross_growth > 0)) throw ParameterError("packet_width: M must be > 0");
  return hbar * std::sqrt(2.0 * a) / c.cross_growth;
}

double h_factor(const CoeffSet& c, double sigma) {
  const double q = a_a_prime_scaled(c, sigma);
  if (!(q > 0)) throw RegimeError("a'(t) <= 0: the off-diagonal block is not normalisable");
  return c.cross_growth * hbar / (2.0 * std::sqrt(q));
}

double overlap_exponent(const CoeffSet& c, double sigma) {
  const double dz = c.force_initial / c.cross_growth;
  const double width = packet_width(c, sigma);
  return -0.5 * (dz / width) * (dz / width);
}

double coherence(const CoeffSet& c, double sigma, CoherenceMode mode, const QuadratureSpec& q) {
  require_sigma(sigma);
  if (c.t == 0) return 1.0;
  if (mode == CoherenceMode::ClosedFormHighT) {
    const WidthParts w = width_parts(c, sigma);
    const double ap = a_prime(c, sigma);
    const double d = c.force_initial * mixing(c, sigma, w) - c.force_final;
    return h_factor(c, sigma) * std::exp(-d * d / (ap * hbar * hbar) + overlap_exponent(c, sigma));
  }
  const GaussianBlock g = offdiagonal_block(c, sigma, 1);
  // The xi = 0 slice is a Gaussian of width 1/sqrt(2 a') centred at q = 0.
  const double half = 14.0 / std::sqrt(2.0 * (-g.c_qq.real()));
  QuadratureSpec spec = q;
  spec.absolute_floor = std::max(spec.absolute_floor, 1e-300);
  const auto re = integrate_1d([&](double x) { return g.value(x, 0.0).real(); }, -half, half, spec);
  const auto im = integrate_1d([&](double x) { return g.value(x, 0.0).imag(); }, -half, half, spec);
  return std::abs(complex(re.value, im.value));
}

double sx_expectation(const CoeffSet& c, double sigma) {
  if (c.t == 0) return 1.0;
  // Both off-diagonal blocks weigh 1/2 and are conjugate: <S_x> is the real part of one trace.
  return offdiagonal_block(c, sigma, 1).integral_over_q(0.0).real();
}

std::optional<double> decoherence_time(double mass, double gamma, double sigma,
                                       const NoiseModel& noise, const DecoherenceSearch& search) {
  require_sigma(sigma);
  if (!(search.t_max > 0) || search.grid_points < 2) {
    throw ParameterError("decoherence_time: t_max must be > 0 and grid_points >= 2");
  }
  if (noise.kind == NoiseModel::Kind::None) return std::nullopt;
  const double threshold = std::exp(-1.0);
  auto h_at = [&](double t) { return h_factor(make_coeff_set(t, mass, gamma, noise), sigma); };

  const double t_min = search.t_min > 0 ? search.t_min : search.t_max * 1e-12;
  if (!(t_min < search.t_max)) throw ParameterError("decoherence_time: t_min must be < t_max");
  const double log_lo = std::log(t_min);
  const double log_step = (std::log(search.t_max) - log_lo) / (search.grid_points - 1);

  double prev = 0;  // h(0) = 1 is above threshold
  for (int i = 0; i < search.grid_points; ++i) {
    const double t = i + 1 == search.grid_points ? search.t_max : std::exp(log_lo + log_step * i);
    if (h_at(t) > threshold) {
      prev = t;
      continue;
    }
    double lo = prev;
    double hi = t;
    while (hi - lo > search.relative_tolerance * hi) {
      const double mid = lo > 0 ? std::sqrt(lo * hi) : 0.5 * hi;
      (h_at(mid) > threshold ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }
  return std::nullopt;
}

}  // namespace sgi
