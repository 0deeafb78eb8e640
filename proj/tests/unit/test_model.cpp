#include "doctest.h"
#include "sgi/constants.hpp"
#include "sgi/errors.hpp"
#include "sgi/model.hpp"
#include "support.hpp"

using namespace sgi;

namespace {

SquidParams typical_squid() {
  SquidParams sq;
  sq.effective_inductance = 1e-10;
  return sq;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("effective inductance") {
  SquidParams sq;  // L = 1e-10, i0 = 1e-5, n = 1
  // 40-digit evaluation of 1 / (1/L + 2 pi i0 / Phi0).
  CHECK(rel_err(effective_inductance(sq), 2.476145497424058747e-11) < 1e-14);
  CHECK(effective_inductance(sq) <= sq.inductance);
  sq.critical_current = 0;
  CHECK(effective_inductance(sq) == sq.inductance);
  sq.effective_inductance = 3e-10;
  CHECK(effective_inductance(sq) == 3e-10);
  sq.inductance = -1;
  CHECK_THROWS_AS(effective_inductance(sq), ParameterError);
}

TEST_CASE("many-minima condition") {
  SquidParams sq;
  CHECK(many_minima_ratio(sq) == doctest::Approx(3.0385).epsilon(1e-4));
  CHECK_FALSE(many_minima_check(sq));
  sq.critical_current = 1e-3;
  CHECK(many_minima_ratio(sq) == doctest::Approx(303.85).epsilon(1e-4));
  CHECK(many_minima_check(sq));
  sq.critical_current = 0;
  CHECK_FALSE(many_minima_check(sq, 1e-9));
}

TEST_CASE("coupling constant") {
  ApparatusParams app;
  CHECK(rel_err(coupling_constant(app), 9.274e-11) < 1e-15);
  app.magnetic_moment *= 2;
  CHECK(rel_err(coupling_constant(app), 2 * 9.274e-11) < 1e-15);
  app.geometry_factor = 0;
  CHECK(coupling_constant(app) == 0);
}

TEST_CASE("geometry factor from the two-wire ring model") {
  const double w = 1e-5, l = 1e-3;
  // Half a ring width out, a = 1 / (w^2 l) exactly.
  CHECK(rel_err(geometry_factor_estimate(w, l, w / 2), 1.0 / (w * w * l)) < 1e-14);
  CHECK(rel_err(geometry_factor_estimate(w, l, w / 2), 1e13) < 1e-12);
  // Central difference of A(z) at z = 2 mm.
  const double z = 2e-3, h = 1e-7;
  const double fd = (effective_area(w, l, z + h) - effective_area(w, l, z - h)) / (2 * h);
  const double area = effective_area(w, l, z);
  CHECK(rel_err(geometry_factor_estimate(w, l, z), fd / (area * area)) < 1e-8);
  CHECK_THROWS_AS(geometry_factor_estimate(w, l, 0.0), ParameterError);
}

TEST_CASE("geometry factor far from the ring") {
  // At z = 1 mm the area has grown by 4 z^2 / w^2 = 4e4, so
  // a = 8 z / (w^3 l (1 + 4 z^2 / w^2)^2), about 5e6 rather than 1e13.
  const double w = 1e-5, l = 1e-3, z = 1e-3;
  const double g = 1 + 4 * z * z / (w * w);
  CHECK(rel_err(geometry_factor_estimate(w, l, z), 8 * z / (w * w * w * l * g * g)) < 1e-13);
  CHECK(geometry_factor_estimate(w, l, z) < 1e7);
}

TEST_CASE("derived bath for the typical SQUID") {
  const DerivedBath b = derive_bath(typical_squid(), ApparatusParams{});
  // Values below from 40-digit arithmetic.
  CHECK(rel_err(b.friction, 8.6007076e-41) < 1e-12);
  CHECK(rel_err(b.cutoff, 10101525445.522107491) < 1e-13);
  CHECK(rel_err(b.cutoff2, 1e11) < 1e-13);
  CHECK(rel_err(b.relaxation_time, 4185702115951482.8757) < 1e-12);
  CHECK(rel_err(b.damping_rate, b.friction / (2 * 1.8e-25)) < 1e-15);
  CHECK(rel_err(b.force_magnitude, 9.274e-11 * constants::flux_quantum) < 1e-15);
  CHECK(b.effective_cutoff() == b.cutoff);
}

TEST_CASE("friction is quadratic in the coupling") {
  ApparatusParams app;
  const double eta1 = derive_bath(typical_squid(), app).friction;
  app.geometry_factor *= 2;
  CHECK(rel_err(derive_bath(typical_squid(), app).friction, 4 * eta1) < 1e-14);
}

TEST_CASE("bath options") {
  BathOptions opt;
  opt.eta_scale = 0;
  const DerivedBath none = derive_bath(typical_squid(), ApparatusParams{}, opt);
  CHECK(none.friction == 0);
  CHECK(none.damping_rate == 0);
  CHECK(std::isinf(none.relaxation_time));
  opt = {};
  opt.gamma_scale = 3;
  const DerivedBath base = derive_bath(typical_squid(), ApparatusParams{});
  const DerivedBath fast = derive_bath(typical_squid(), ApparatusParams{}, opt);
  CHECK(fast.friction == base.friction);
  CHECK(rel_err(fast.damping_rate, 3 * base.damping_rate) < 1e-15);
}

TEST_CASE("imaginary cutoff is rejected") {
  SquidParams sq = typical_squid();
  sq.resistance = 100;  // L0^2 / R^2 = 1e-24 < 2 C L0 = 2e-22
  CHECK_THROWS_AS(derive_bath(sq, ApparatusParams{}), RegimeError);
}

TEST_CASE("derive_bath is deterministic") {
  const DerivedBath a = derive_bath(typical_squid(), ApparatusParams{});
  const DerivedBath b = derive_bath(typical_squid(), ApparatusParams{});
  CHECK(a.friction == b.friction);
  CHECK(a.cutoff == b.cutoff);
  CHECK(a.damping_rate == b.damping_rate);
}

TEST_CASE("parameter validation") {
  ApparatusParams app;
  app.initial_width = 0;
  CHECK_THROWS_AS(validate(app), ParameterError);
  SquidParams sq;
  sq.flux_index = 0;
  CHECK_THROWS_AS(validate(sq), ParameterError);
  sq = SquidParams{};
  sq.critical_current = 0;  // the decoupled limit stays valid
  CHECK_NOTHROW(validate(sq));
}

}
