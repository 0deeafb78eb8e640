#pragma once

#include <optional>

namespace sgi {

/// Circuit parameters of the SQUID that sources the field gradient.
struct SquidParams {
  double capacitance = 1e-12;      // junction capacitance [F]
  double inductance = 1e-10;       // loop inductance [H]
  double critical_current = 1e-5;  // [A]
  double resistance = 1.0;         // junction shunt resistance [Ohm]
  int flux_index = 1;              // metastable minimum n
  double ring_width = 1e-5;        // [m]
  double ring_length = 1e-3;       // [m]
  /// When set, used in place of the value computed from the circuit.
  std::optional<double> effective_inductance;
};

/// Beam and apparatus description.
struct ApparatusParams {
  double geometry_factor = 1e13;         // a [m^-3]
  double magnetic_moment = 9.274e-24;    // [J/T]
  double particle_mass = 1.8e-25;        // [kg]
  double initial_width = 1e-6;           // sigma [m]
  double beam_velocity = 1000.0;         // [m/s]
  double apparatus_length = 1e-3;        // [m]
  double temperature = 0.1;              // [K]

  double experiment_time() const { return apparatus_length / beam_velocity; }
};

/// Knobs that rescale the derived bath without touching the circuit.
struct BathOptions {
  /// gamma = eta / (damping_convention * m); 2 matches the e^{-2 gamma t} trajectory decay.
  double damping_convention = 2.0;
  double eta_scale = 1.0;    // multiplies eta, hence both friction and noise
  double gamma_scale = 1.0;  // multiplies gamma only
};

/// Effective Ohmic environment seen by the particle.
struct DerivedBath {
  double effective_inductance = 0;  // L0 [H]
  double coupling = 0;              // epsilon = mu a [J / (Wb m)]
  double friction = 0;              // eta [kg/s]
  double cutoff = 0;                // Omega [rad/s]
  double cutoff2 = 0;               // Omega' [rad/s]
  double damping_rate = 0;          // gamma [1/s]
  double force_magnitude = 0;       // f0 = epsilon n Phi0 [N]
  double relaxation_time = 0;       // 1/gamma [s], +inf when gamma = 0

  double effective_cutoff() const { return cutoff < cutoff2 ? cutoff : cutoff2; }
};

void validate(const SquidParams& sq);
void validate(const ApparatusParams& app);

/// L0 = [1/L + 2 pi i0 / (n Phi0)]^{-1}; honours SquidParams::effective_inductance.
double effective_inductance(const SquidParams& sq);

/// 2 pi i0 L / Phi0, the number of accessible flux minima (roughly).
double many_minima_ratio(const SquidParams& sq);
bool many_minima_check(const SquidParams& sq, double threshold = 100.0);

double coupling_constant(const ApparatusParams& app);

/// Flux-to-gradient factor a(z) = A(z)^{-2} dA/dz for a rectangular ring.
///
/// The field of the ring is approximated by two antiparallel infinite wires
/// separated by the ring width d. Flux conservation B(z) A(z) = B(0) A_ring
/// with the on-axis two-wire field B(z) ~ d / (z^2 + d^2/4) gives
/// A(z) = A_ring (1 + 4 z^2 / d^2), differentiated analytically.
double geometry_factor_estimate(double ring_width, double ring_length, double z);

/// Effective area A(z) used by geometry_factor_estimate, exposed for cross-checks.
double effective_area(double ring_width, double ring_length, double z);

DerivedBath derive_bath(const SquidParams& sq, const ApparatusParams& app,
                        const BathOptions& options = {});

}  // namespace sgi
