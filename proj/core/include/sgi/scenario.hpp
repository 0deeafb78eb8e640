#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgi/density.hpp"
#include "sgi/force_profile.hpp"
#include "sgi/kernels.hpp"
#include "sgi/model.hpp"
#include "sgi/quadrature.hpp"

namespace sgi {

enum class NoiseChoice { HighTemperature, Quadrature, None };

struct ProfileSpec {
  enum class Kind { Balanced4, Constant, Segments };
  Kind kind = Kind::Balanced4;
  /// Force amplitude; defaults to epsilon n Phi0 from the circuit.
  std::optional<double> f0;
  /// Used by Kind::Segments; must cover [0, T_exp].
  std::vector<ForceSegment> segments;
};

/// Everything a run needs, as read from an INI-style file.
///
///   [squid]      capacitance inductance critical_current resistance flux_index
///                ring_width ring_length effective_inductance
///   [apparatus]  geometry_factor (number or auto) magnetic_moment mass
///                initial_width beam_velocity length temperature
///   [bath]       eta_scale gamma_scale damping_convention
///                noise (high_t | quadrature | none) spectrum (sharp | squid)
///   [profile]    shape (balanced4 | constant | segments) f0
///                segments = t0 t1 f; t0 t1 f; ...
///   [run]        samples coherence (closed_form | trace_integral) t_max
///                quadrature_tolerance quadrature_nodes kernel_grid
///   [oracle]     tolerance_scale
struct ScenarioConfig {
  std::string name = "custom";
  SquidParams squid;
  ApparatusParams apparatus;
  /// Unset means: estimate from the ring at z = ring_width / 2.
  std::optional<double> geometry_factor;
  BathOptions bath;
  NoiseChoice noise = NoiseChoice::HighTemperature;
  /// Sharp: Ohmic up to min(Omega, Omega'). Squid: the full two-cutoff shape.
  SpectralKind spectrum = SpectralKind::SharpCutoffOhmic;
  ProfileSpec profile;
  int samples = 201;
  CoherenceMode coherence_mode = CoherenceMode::ClosedFormHighT;
  double t_max = 1e9;  // horizon of the decoherence-time search [s]
  QuadratureSpec quadrature;
  int kernel_grid = 4096;
  double oracle_tolerance_scale = 1.0;
};

/// Parses config text; `origin` names the source in error messages.
/// Throws ConfigError carrying the offending line.
ScenarioConfig parse_scenario(std::string_view text, const std::string& origin = "config");
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Built-in presets (paper-squid, noiseless, noisy-desk), identical to the
/// files shipped under presets/.
std::vector<std::string> preset_names();
std::string preset_text(const std::string& name);
ScenarioConfig load_preset(const std::string& name);

/// Applies SGI_QUAD_TOL when set; throws ConfigError if it does not parse.
void apply_environment(ScenarioConfig& config);

}  // namespace sgi
