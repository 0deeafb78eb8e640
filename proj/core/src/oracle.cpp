#include "sgi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sgi/constants.hpp"
#include "sgi/errors.hpp"

namespace sgi::oracle {

namespace {

using constants::hbar;
constexpr double pi = constants::pi;

struct State {
  double z, v;
};

}  // namespace

Trajectory classical_trajectory_rk4(const ForceProfile& fp, double mass, double gamma,
                                    double dt) {
  if (!(dt > 0) || !(mass > 0) || !(gamma >= 0)) {
    throw ParameterError("classical_trajectory_rk4: need dt > 0, mass > 0, gamma >= 0");
  }
  Trajectory out;
  State y{0.0, 0.0};
  double t = 0;
  out.times.push_back(0.0);
  out.position.push_back(0.0);
  out.velocity.push_back(0.0);
  for (const ForceSegment& seg : fp.segments()) {
    const double f = seg.force / mass;
    auto rhs = [&](const State& s) { return State{s.v, f - 2.0 * gamma * s.v}; };
    const double len = seg.t_end - seg.t_start;
    const long steps = std::max(1L, static_cast<long>(std::ceil(len / dt - 1e-9)));
    const double h = len / static_cast<double>(steps);
    for (long i = 0; i < steps; ++i) {
      const State k1 = rhs(y);
      const State k2 = rhs({y.z + 0.5 * h * k1.z, y.v + 0.5 * h * k1.v});
      const State k3 = rhs({y.z + 0.5 * h * k2.z, y.v + 0.5 * h * k2.v});
      const State k4 = rhs({y.z + h * k3.z, y.v + h * k3.v});
      y.z += h / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
      y.v += h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
      t = (i + 1 == steps) ? seg.t_end : seg.t_start + h * static_cast<double>(i + 1);
      out.times.push_back(t);
      out.position.push_back(y.z);
      out.velocity.push_back(y.v);
    }
  }
  return out;
}

std::complex<double> noiseless_evolution(const ForceProfile& fp, double mass, double sigma,
                                         double t) {
  if (!(mass > 0) || !(sigma > 0) || !(t >= 0)) {
    throw ParameterError("noiseless_evolution: need mass > 0, sigma > 0, t >= 0");
  }
  using cd = std::complex<double>;
  // Per branch: centre z, momentum p and the phase integral of p^2/2m + F z.
  struct Branch {
    double z = 0, p = 0, theta = 0;
  };
  Branch br[2];
  const double sign[2] = {+1.0, -1.0};
  for (int b = 0; b < 2; ++b) {
    for (const ForceSegment& seg : fp.segments()) {
      if (seg.t_start >= t) break;
      const double tau = std::min(seg.t_end, t) - seg.t_start;
      const double f = sign[b] * seg.force;
      Branch& s = br[b];
      const double kinetic = (s.p * s.p * tau + s.p * f * tau * tau + f * f * tau * tau * tau / 3.0) /
                             (2.0 * mass);
      const double work = f * (s.z * tau + s.p * tau * tau / (2.0 * mass) +
                               f * tau * tau * tau / (6.0 * mass));
      s.theta += kinetic + work;
      s.z += s.p * tau / mass + 0.5 * f * tau * tau / mass;
      s.p += f * tau;
    }
  }
  // psi = N exp(-beta (x - z)^2 + i [p (x - z) + theta] / hbar), free complex width beta.
  const cd beta = 1.0 / (4.0 * sigma * sigma * cd(1.0, hbar * t / (2.0 * mass * sigma * sigma)));
  const Branch& up = br[0];
  const Branch& dn = br[1];
  const double alpha = 2.0 * beta.real();
  const cd i(0.0, 1.0);
  const cd lin = 2.0 * beta * up.z + 2.0 * std::conj(beta) * dn.z + i * (up.p - dn.p) / hbar;
  const cd constant = -beta * up.z * up.z - std::conj(beta) * dn.z * dn.z +
                      i * (-up.p * up.z + dn.p * dn.z + up.theta - dn.theta) / hbar;
  return std::exp(lin * lin / (4.0 * alpha) + constant);
}

double noise_kernel_simpson(const SpectralFunction& sf, double s, double temperature) {
  if (!(temperature > 0)) throw ParameterError("noise_kernel_simpson: temperature must be > 0");
  if (sf.friction == 0) return 0.0;
  const bool sharp = sf.kind == SpectralKind::SharpCutoffOhmic;
  const double w_max = sharp ? sf.cutoff : 20.0 * std::min(sf.cutoff, sf.cutoff2);
  const double thermal = 2.0 * constants::boltzmann * temperature / hbar;
  auto integrand = [&](double w) {
    double shape = 1.0;
    if (!sharp) {
      const double r1 = w / sf.cutoff;
      const double r2 = w / sf.cutoff2;
      shape = 1.0 / (1.0 + r1 * r1 + r2 * r2 * r2 * r2);
    }
    const double x = w / thermal;
    const double xcoth = x < 1e-4 ? 1.0 + x * x / 3.0 : x / std::tanh(x);
    return sf.friction * thermal * xcoth * shape * std::cos(w * s);
  };
  // 40 points per period of cos(w s), and never fewer than 2000 intervals.
  long n = std::max(2000L, static_cast<long>(std::ceil(40.0 * w_max * std::abs(s) / (2.0 * pi))));
  if (n % 2) ++n;
  const double h = w_max / static_cast<double>(n);
  double sum = integrand(0.0) + integrand(w_max);
  for (long k = 1; k < n; ++k) sum += (k % 2 ? 4.0 : 2.0) * integrand(h * static_cast<double>(k));
  return sum * h / 3.0 / pi;
}

NoiseIntegrals brute_force_abc(double t, double gamma, double temperature,
                               const SpectralFunction& sf, int n) {
  if (!(t > 0) || n < 2) throw ParameterError("brute_force_abc: need t > 0 and n >= 2");
  if (sf.friction == 0) return {};
  const double h = t / (n - 1);
  std::vector<double> kernel(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) kernel[static_cast<std::size_t>(k)] = noise_kernel_simpson(sf, k * h, temperature);

  // Weights of the final (u) and initial (v) end point along the classical path.
  std::vector<double> u(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double s = k * h;
    if (gamma == 0) {
      u[static_cast<std::size_t>(k)] = s / t;
      v[static_cast<std::size_t>(k)] = (t - s) / t;
    } else {
      const double sh = std::sinh(gamma * t);
      u[static_cast<std::size_t>(k)] = std::exp(-gamma * t) / sh * std::exp(gamma * s) * std::sinh(gamma * s);
      v[static_cast<std::size_t>(k)] = std::exp(gamma * s) * std::sinh(gamma * (t - s)) / sh;
    }
  }
  NoiseIntegrals r;
  for (int i = 0; i < n; ++i) {
    const double wi = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    const auto ui = u[static_cast<std::size_t>(i)], vi = v[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      const double w = wi * ((j == 0 || j == n - 1) ? 0.5 : 1.0) *
                       kernel[static_cast<std::size_t>(std::abs(i - j))];
      r.a += w * ui * u[static_cast<std::size_t>(j)];
      r.b += w * ui * v[static_cast<std::size_t>(j)];
      r.c += w * vi * v[static_cast<std::size_t>(j)];
    }
  }
  r.a *= h * h;
  r.b *= h * h;
  r.c *= h * h;
  return r;
}

TraceResult trace_offdiag_numeric(const CoeffSet& c, double sigma, int intervals) {
  if (!(sigma > 0) || intervals < 2) throw ParameterError("trace_offdiag_numeric: bad input");
  if (intervals % 2) ++intervals;
  const double s2 = sigma * sigma;
  const double lp = c.coupling_plus;
  const double n = c.cross_decay;
  const double a_ = c.noise_final, b_ = c.noise_cross, c_ = c.noise_initial;
  const double x = c.force_final, z = c.force_initial;
  const double a = (lp * lp * s2 / 2.0 + hbar * c_ / 2.0 + hbar * hbar / (8.0 * s2)) / (hbar * hbar);
  const double qq = -2.0 * s2 * n * n / (hbar * hbar) * (1.0 - s2 * lp * lp / (2.0 * a * hbar * hbar)) +
                    2.0 / hbar * (b_ * b_ / (2.0 * a * hbar) - a_) -
                    2.0 * s2 * lp * n * b_ / (a * hbar * hbar * hbar);
  if (!(qq < 0)) throw RegimeError("trace_offdiag_numeric: q^2 coefficient is not negative");
  // xi = 0, upper signs.
  const double k = ((-2.0 * z) * (b_ / (2.0 * a * hbar) - s2 * n * lp / (2.0 * a * hbar * hbar)) + 2.0 * x) / hbar;
  const double constant = -(2.0 * z) * (2.0 * z) / (16.0 * a * hbar * hbar);
  const double prefactor = c.normalization * std::sqrt(pi / a);

  const double half = 12.0 / std::sqrt(-2.0 * qq);
  // At least 16 points per turn of the phase k q, or Simpson aliases.
  const double turns = std::abs(k) * 2.0 * half / (2.0 * pi);
  if (turns * 16.0 > 1e8) throw RegimeError("trace_offdiag_numeric: phase too fast to resolve");
  intervals = std::max(intervals, 2 * static_cast<int>(std::ceil(turns * 8.0)));
  const double h = 2.0 * half / intervals;
  std::complex<double> sum = 0;
  double abs_sum = 0;
  for (int j = 0; j <= intervals; ++j) {
    const double q = -half + h * j;
    const double w = (j == 0 || j == intervals) ? 1.0 : (j % 2 ? 4.0 : 2.0);
    const std::complex<double> term = w * std::exp(std::complex<double>(qq * q * q + constant, k * q));
    sum += term;
    abs_sum += std::abs(term);
  }
  TraceResult r;
  r.value = prefactor * sum * h / 3.0;
  r.truncation = std::erfc(half * std::sqrt(-qq));
  r.resolution = 1e3 * std::numeric_limits<double>::epsilon() * std::abs(prefactor) * abs_sum * h / 3.0;
  return r;
}

}  // namespace sgi::oracle
