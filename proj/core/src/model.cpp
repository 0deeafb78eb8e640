#include "sgi/model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sgi/constants.hpp"
#include "sgi/errors.hpp"

namespace sgi {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0) || !std::isfinite(value)) {
    throw ParameterError(std::string(name) + " must be finite and strictly positive");
  }
}

}  // namespace

void validate(const SquidParams& sq) {
  require_positive(sq.capacitance, "capacitance");
  require_positive(sq.inductance, "inductance");
  require_positive(sq.resistance, "resistance");
  require_positive(sq.ring_width, "ring_width");
  require_positive(sq.ring_length, "ring_length");
  // i0 = 0 is the decoupled limit L0 = L and stays admissible.
  if (!(sq.critical_current >= 0) || !std::isfinite(sq.critical_current)) {
    throw ParameterError("critical_current must be finite and non-negative");
  }
  if (sq.flux_index < 1) throw ParameterError("flux_index must be >= 1");
  if (sq.effective_inductance) require_positive(*sq.effective_inductance, "effective_inductance");
}

void validate(const ApparatusParams& app) {
  require_positive(app.geometry_factor, "geometry_factor");
  require_positive(app.magnetic_moment, "magnetic_moment");
  require_positive(app.particle_mass, "particle_mass");
  require_positive(app.initial_width, "initial_width");
  require_positive(app.beam_velocity, "beam_velocity");
  require_positive(app.apparatus_length, "apparatus_length");
  require_positive(app.temperature, "temperature");
  require_positive(app.experiment_time(), "experiment duration");
}

double effective_inductance(const SquidParams& sq) {
  validate(sq);
  if (sq.effective_inductance) return *sq.effective_inductance;
  const double inverse = 1.0 / sq.inductance +
                         2.0 * constants::pi * sq.critical_current /
                             (sq.flux_index * constants::flux_quantum);
  return 1.0 / inverse;
}

double many_minima_ratio(const SquidParams& sq) {
  return 2.0 * constants::pi * sq.critical_current * sq.inductance / constants::flux_quantum;
}

bool many_minima_check(const SquidParams& sq, double threshold) {
  return many_minima_ratio(sq) >= threshold;
}

double coupling_constant(const ApparatusParams& app) {
  return app.magnetic_moment * app.geometry_factor;
}

double effective_area(double ring_width, double ring_length, double z) {
  require_positive(ring_width, "ring_width");
  require_positive(ring_length, "ring_length");
  const double ratio = 2.0 * z / ring_width;
  return ring_width * ring_length * (1.0 + ratio * ratio);
}

double geometry_factor_estimate(double ring_width, double ring_length, double z) {
  if (z == 0 || !std::isfinite(z)) {
    throw ParameterError("geometry_factor_estimate: z must be finite and non-zero");
  }
  const double area = effective_area(ring_width, ring_length, z);
  const double d_area = ring_width * ring_length * 8.0 * z / (ring_width * ring_width);
  return d_area / (area * area);
}

DerivedBath derive_bath(const SquidParams& sq, const ApparatusParams& app,
                        const BathOptions& options) {
  validate(app);
  if (!(options.damping_convention > 0) || !(options.eta_scale >= 0) ||
      !(options.gamma_scale >= 0)) {
    throw ParameterError("bath options must be non-negative (damping_convention > 0)");
  }

  DerivedBath bath;
  const double l0 = effective_inductance(sq);
  bath.effective_inductance = l0;
  bath.coupling = coupling_constant(app);
  bath.friction =
      options.eta_scale * bath.coupling * bath.coupling * l0 * l0 / sq.resistance;

  const double rc_term = l0 * l0 / (sq.resistance * sq.resistance) - 2.0 * sq.capacitance * l0;
  if (!(rc_term > 0)) {
    throw RegimeError("cutoff Omega is imaginary: need L0^2/R^2 > 2 C L0");
  }
  bath.cutoff = 1.0 / std::sqrt(rc_term);
  bath.cutoff2 = 1.0 / std::sqrt(sq.capacitance * l0);

  bath.damping_rate = options.gamma_scale * bath.friction /
                      (options.damping_convention * app.particle_mass);
  bath.force_magnitude = bath.coupling * sq.flux_index * constants::flux_quantum;
  bath.relaxation_time = bath.damping_rate > 0 ? 1.0 / bath.damping_rate
                                               : std::numeric_limits<double>::infinity();
  return bath;
}

}  // namespace sgi
