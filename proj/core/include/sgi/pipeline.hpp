#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgi/density.hpp"
#include "sgi/scenario.hpp"

namespace sgi {

/// A ScenarioConfig with every derived quantity worked out once.
struct ResolvedScenario {
  ScenarioConfig config;
  ApparatusParams apparatus;  // geometry factor filled in
  DerivedBath bath;
  SpectralFunction spectrum;
  ForceProfile profile;
  NoiseModel noise;
  double noise_weight = 0;  // 2 eta k T / hbar

  double mass() const { return apparatus.particle_mass; }
  double sigma() const { return apparatus.initial_width; }
  double duration() const { return apparatus.experiment_time(); }
  double gamma() const { return bath.damping_rate; }
};

ResolvedScenario resolve(const ScenarioConfig& config);

/// Uniform sample times on [0, T_exp], endpoints included.
std::vector<double> sample_times(double duration, int samples);

/// Every sample is independent; threads = 0 uses the hardware concurrency.
/// The result does not depend on the thread count.
CoherenceTrace run_trace(const ResolvedScenario& s, int threads = 0);

/// Decoherence time from the delta-kernel noise weight of the scenario
/// (tau is far beyond any bath memory time, where the weight is exact).
std::optional<double> scenario_decoherence_time(const ResolvedScenario& s);

struct EstimateRow {
  std::string name;
  double value = 0;
  std::string unit;
};

std::vector<EstimateRow> estimate(const ResolvedScenario& s);

struct SweepAxis {
  std::string name;  // temperature, ring_width, beam_velocity, eta_scale, gamma_scale
  std::vector<double> values;
};

/// "name=v1,v2,..." or "name=log:lo:hi:n" or "name=lin:lo:hi:n".
SweepAxis parse_sweep_axis(const std::string& text);

struct SweepRow {
  std::vector<double> axis_values;
  std::optional<double> decoherence_time;
  double final_coherence = 0;
};

/// One or two axes, at most 1e6 grid points; rows in grid order
/// (last axis fastest) whatever the thread count.
std::vector<SweepRow> run_sweep(const ScenarioConfig& base, const std::vector<SweepAxis>& axes,
                                int threads = 0);

struct OracleRow {
  std::string name;
  double achieved = 0;
  double tolerance = 0;
  bool passed = false;
  std::string note;
};

/// Compares every brute-force oracle with the main pipeline at the scenario's
/// parameters. Tolerances are multiplied by config.oracle_tolerance_scale.
std::vector<OracleRow> oracle_check(const ResolvedScenario& s);

/// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace sgi
