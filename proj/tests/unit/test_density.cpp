#include <cmath>

#include "doctest.h"
#include "sgi/constants.hpp"
#include "sgi/density.hpp"
#include "sgi/errors.hpp"
#include "support.hpp"

using namespace sgi;
using constants::boltzmann;
using constants::hbar;

namespace {

// Bench-scale noisy set: gamma ~ 1e4 1/s, T = 1 mK, sigma = 10 nm, 1 us flight.
struct Desk {
  double mass = 1.8e-25;
  double eta = 8.6007076e-41 * 4.1857e19;
  double gamma = eta / (2 * mass);
  double weight = 2 * eta * boltzmann * 1e-3 / hbar;
  double sigma = 1e-8;
  double duration = 1e-6;
  ForceProfile profile = ForceProfile::balanced4(6e-20, 1e-6);

  CoeffSet at(double t) const {
    return make_coeff_set(t, mass, gamma, profile, NoiseModel::high_temperature(weight));
  }
};

}  // namespace

TEST_SUITE("density") {

TEST_CASE("width coefficient") {
  CoeffSet c;
  c.t = 1;
  CHECK(rel_err(a_of_t(c, 2e-6), 1 / (8 * 4e-12)) < 1e-15);
  CHECK_THROWS_AS(a_of_t(c, 0.0), ParameterError);
}

TEST_CASE("noisy bench values against 50-digit evaluation") {
  // a, a', h, sigma_tilde, coherence, Z/M at T/4, T/2, T.
  struct Row {
    double frac, a, ap, h, width, coh, centre;
  };
  const Row rows[] = {
      {0.25, 3965259831302350.8903, 6125100734389217.338, 0.69441513867045824629,
       1.3010955881327880984e-8, 0.071106100386676463326, 1.0399327244015588692e-8},
      {0.5, 2585257065457072.2849, 5211134187441994.3138, 0.46735620268920283295,
       2.0959014734578281055e-8, 0.12632140005236901355, 2.0729469888541087127e-8},
      {1.0, 2895809011729809.4512, 6004393902826277.5989, 0.20672000544571158841,
       4.4143616152127295611e-8, 0.20671140784010653783, -2.0626156793390419081e-10},
  };
  const Desk d;
  for (const Row& r : rows) {
    CAPTURE(r.frac);
    const double t = r.frac * d.duration;
    const CoeffSet c = d.at(t);
    CHECK(rel_err(a_of_t(c, d.sigma), r.a) < 1e-11);
    CHECK(rel_err(a_prime(c, d.sigma), r.ap) < 1e-11);
    CHECK(rel_err(h_factor(c, d.sigma), r.h) < 1e-11);
    CHECK(rel_err(packet_width(c, d.sigma), r.width) < 1e-11);
    CHECK(rel_err(coherence(c, d.sigma, CoherenceMode::ClosedFormHighT), r.coh) < 1e-10);
    CHECK(rel_err(packet_center(d.profile, t, d.mass, d.gamma), r.centre) < 1e-10);
    CHECK(rel_err(c.force_initial / c.cross_growth, r.centre) < 1e-10);
  }
}

TEST_CASE("a' forms agree where nothing cancels") {
  const Desk d;
  for (double f : {0.1, 0.5, 1.0}) {
    const CoeffSet c = d.at(f * d.duration);
    CHECK(rel_err(a_prime_direct(c, d.sigma), a_prime(c, d.sigma)) < 1e-10);
    CHECK(rel_err(-diagonal_block(c, d.sigma, 1).c_xx.real() * 4, a_prime(c, d.sigma)) < 1e-15);
  }
}

TEST_CASE("a' short-time limit and sign") {
  const double sigma = 1e-6, m = 1.8e-25;
  const CoeffSet c = make_coeff_set(1e-15, m, 0.0, NoiseModel::none());
  CHECK(rel_err(a_prime(c, sigma), 1 / (2 * sigma * sigma)) < 1e-9);
  for (double t = 1e-9; t < 1e9; t *= 10) {
    for (double w : {0.0, 1e-31, 1e-25}) {
      const CoeffSet k = make_coeff_set(t, m, 2.4e-16, NoiseModel::high_temperature(w));
      CHECK(a_prime(k, sigma) > 0);
    }
  }
}

TEST_CASE("diagonal blocks are normalised and hermitian") {
  const Desk d;
  for (double f : {0.05, 0.3, 0.5, 0.77, 1.0}) {
    const CoeffSet c = d.at(f * d.duration);
    for (int spin : {1, -1}) {
      const GaussianBlock g = diagonal_block(c, d.sigma, spin);
      CHECK(std::abs(g.integral_over_q(0.0) - 1.0) < 1e-12);
      const double centre = spin * c.force_initial / c.cross_growth;
      const double w = packet_width(c, d.sigma);
      const auto r = integrate_1d([&](double q) { return g.value(q, 0.0).real(); },
                                  centre - 12 * w, centre + 12 * w, QuadratureSpec{16, 8, 1e-12});
      CHECK(std::abs(r.value - 1.0) < 1e-6);
      // Peak of the packet sits at +-Z/M.
      CHECK(std::abs(g.value(centre, 0.0)) > std::abs(g.value(centre + 0.01 * w, 0.0)));
      CHECK(std::abs(g.value(centre, 0.0)) > std::abs(g.value(centre - 0.01 * w, 0.0)));
      for (double q : {-3e-8, 0.0, 1e-8}) {
        for (double xi : {1e-9, 2e-8}) {
          const complex a = rho_diagonal(q, xi, c, d.sigma, spin);
          const complex b = std::conj(rho_diagonal(q, -xi, c, d.sigma, spin));
          CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));
        }
      }
    }
  }
}

TEST_CASE("blocks without force are centred and even") {
  const ForceProfile none = ForceProfile::constant(0.0, 1e-6);
  const CoeffSet c = make_coeff_set(4e-7, 1.8e-25, 1e4, none, NoiseModel::high_temperature(1e-12));
  const GaussianBlock d = diagonal_block(c, 1e-8, 1);
  CHECK(d.c_q == complex(0.0, 0.0));
  const GaussianBlock od = offdiagonal_block(c, 1e-8, 1);
  for (double q : {1e-9, 7e-9}) {
    CHECK(std::abs(od.value(q, 0.0) - od.value(-q, 0.0)) < 1e-15 * std::abs(od.value(q, 0.0)));
  }
}

TEST_CASE("short-time blocks reduce to the initial Gaussian") {
  // Spreading ratio s = hbar t / 2 m sigma^2 = 1e-5: the physical change is O(s)
  // and the cancellation between the m/t terms costs O(eps / s^2).
  const double sigma = 1e-6, m = 1.8e-25;
  const double t = 1e-5 * 2 * m * sigma * sigma / hbar;
  const ForceProfile fp = ForceProfile::constant(0.0, 1.0);
  const CoeffSet c = make_coeff_set(t, m, 0.0, fp, NoiseModel::none());
  auto initial = [&](double q, double xi) {
    return std::exp(-q * q / (2 * sigma * sigma) - xi * xi / (8 * sigma * sigma)) /
           std::sqrt(2 * constants::pi * sigma * sigma);
  };
  for (double q : {0.0, 5e-7, -1.3e-6}) {
    for (double xi : {0.0, 1e-6, -2.5e-6}) {
      const double ref = initial(q, xi);
      CHECK(std::abs(rho_diagonal(q, xi, c, sigma, 1) - ref) < 1e-4 * ref);
      CHECK(std::abs(rho_offdiagonal(q, xi, c, sigma, 1) - ref) < 1e-4 * ref);
    }
  }
}

TEST_CASE("packet centre") {
  const double m = 2.0, f = 3.0, T = 4.0;
  CHECK(packet_center(ForceProfile::constant(0.0, T), 1.0, m, 0.1) == 0);
  CHECK(rel_err(packet_center(ForceProfile::constant(f, T), 2.5, m, 0.0), f * 2.5 * 2.5 / (2 * m)) <
        1e-15);
  CHECK(rel_err(packet_center(ForceProfile::constant(f, T), 2.5, m, 1e-14), f * 2.5 * 2.5 / (2 * m)) <
        1e-12);
  const ForceProfile b = ForceProfile::balanced4(f, T);
  CHECK(std::abs(packet_center(b, T, m, 0.0)) < 1e-15 * f * T * T / m);
  // Each branch travels f (T/4)^2 / 2m in the first quarter and the same again
  // while the second quarter brakes it: f T^2 / 16 m at mid-run.
  CHECK(rel_err(packet_center(b, T / 2, m, 0.0), f * T * T / (16 * m)) < 1e-14);
  CHECK_THROWS_AS(packet_center(b, 1.1 * T, m, 0.0), ParameterError);
}

TEST_CASE("packet width") {
  const double sigma = 1e-7, m = 1.8e-25;
  const CoeffSet early = make_coeff_set(1e-15, m, 0.0, NoiseModel::none());
  CHECK(rel_err(packet_width(early, sigma), sigma) < 1e-9);
  for (double t : {1e-7, 1e-6, 1e-5}) {
    const CoeffSet c = make_coeff_set(t, m, 0.0, NoiseModel::none());
    const double s = hbar * t / (2 * m * sigma * sigma);
    CHECK(rel_err(packet_width(c, sigma), sigma * std::sqrt(1 + s * s)) < 1e-12);
  }
  const CoeffSet quiet = make_coeff_set(1e-6, m, 1e3, NoiseModel::high_temperature(1e-14));
  const CoeffSet loud = make_coeff_set(1e-6, m, 1e3, NoiseModel::high_temperature(1e-12));
  CHECK(packet_width(loud, sigma) > packet_width(quiet, sigma));
}

TEST_CASE("coherence without a bath") {
  const double m = 1.8e-25, sigma = 6e-8, T = 1e-6;
  const ForceProfile fp = ForceProfile::balanced4(2e-18, T);
  auto at = [&](double t) { return make_coeff_set(t, m, 0.0, fp, NoiseModel::none()); };
  CHECK(coherence(at(T), sigma, CoherenceMode::ClosedFormHighT) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(coherence(at(T / 2), sigma, CoherenceMode::ClosedFormHighT) < 1e-10);
  CHECK(sx_expectation(at(T), sigma) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(sx_expectation(at(T / 4), sigma) < 1e-6);
  const ForceProfile none = ForceProfile::constant(0.0, T);
  for (double t : {1e-8, 3e-7, 1e-6}) {
    const CoeffSet c = make_coeff_set(t, m, 0.0, none, NoiseModel::none());
    CHECK(coherence(c, sigma, CoherenceMode::ClosedFormHighT) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CoeffSet zero;
  CHECK(coherence(zero, sigma, CoherenceMode::TraceIntegral) == 1.0);
  CHECK(sx_expectation(zero, sigma) == 1.0);
}

TEST_CASE("closed form and trace integral agree") {
  const Desk d;
  for (double f = 0.01; f <= 1.0; f += 0.07) {
    const CoeffSet c = d.at(f * d.duration);
    const double closed = coherence(c, d.sigma, CoherenceMode::ClosedFormHighT);
    const double traced = coherence(c, d.sigma, CoherenceMode::TraceIntegral,
                                    QuadratureSpec{16, 8, 1e-12});
    CHECK(rel_err(traced, closed) < 1e-9);
    CHECK(closed <= h_factor(c, d.sigma) + 1e-10);
    CHECK(rel_err(sx_expectation(c, d.sigma), closed) < 1e-12);
  }
}

TEST_CASE("h factor") {
  const double m = 1.8e-25, sigma = 1e-6, t = 1e-6;
  const CoeffSet c = make_coeff_set(t, m, 1e-12 / t, NoiseModel::high_temperature(1e-30));
  CHECK(std::abs(h_factor(c, sigma) - 1) < 1e-6);
  // Monotone decay at the typical circuit (gamma = 2.4e-16 1/s, 0.1 K).
  double previous = 1.0;
  for (double s = 1e-3; s < 1e6; s *= 1.5) {
    const CoeffSet k = make_coeff_set(s, m, 2.389085e-16, NoiseModel::high_temperature(2.252015e-30));
    const double h = h_factor(k, sigma);
    CHECK(h <= previous);
    previous = h;
  }
  const Desk d;
  const double end = h_factor(d.at(d.duration), d.sigma);
  CHECK(end > 0.1);
  CHECK(end < 0.3);
}

TEST_CASE("decoherence time") {
  const double m = 1.8e-25, sigma = 1e-6;
  const double gamma = 8.6007076e-41 / (2 * m);
  const double weight = 2 * 8.6007076e-41 * boltzmann * 0.1 / hbar;
  // 50-digit root of h(t) = 1/e.
  const auto tau = decoherence_time(m, gamma, sigma, NoiseModel::high_temperature(weight));
  REQUIRE(tau.has_value());
  CHECK(rel_err(*tau, 13.776908236423265937) < 1e-8);
  const auto faster = decoherence_time(m, gamma, sigma, NoiseModel::high_temperature(2 * weight));
  REQUIRE(faster.has_value());
  CHECK(*faster < *tau);
  CHECK_FALSE(decoherence_time(m, 0.0, sigma, NoiseModel::none()).has_value());
  DecoherenceSearch short_search;
  short_search.t_max = 1.0;
  CHECK_FALSE(
      decoherence_time(m, gamma, sigma, NoiseModel::high_temperature(weight), short_search).has_value());
}

}
