#include "sgi/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "sgi/constants.hpp"
#include "sgi/errors.hpp"
#include "sgi/oracle.hpp"

namespace sgi {

namespace {

ForceProfile build_profile(const ProfileSpec& spec, double f0, double duration) {
  switch (spec.kind) {
    case ProfileSpec::Kind::Balanced4:
      return ForceProfile::balanced4(f0, duration);
    case ProfileSpec::Kind::Constant:
      return ForceProfile::constant(f0, duration);
    case ProfileSpec::Kind::Segments: {
      ForceProfile fp(spec.segments);
      if (std::abs(fp.total_time() - duration) > 1e-12 * duration) {
        throw ConfigError("segments must end at length / beam_velocity");
      }
      return fp;
    }
  }
  throw ConfigError("unknown profile kind");
}

double relative_gap(double value, double reference) {
  const double scale = std::abs(reference);
  if (scale == 0) return std::abs(value);
  return std::abs(value - reference) / scale;
}

}  // namespace

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, n);
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

ResolvedScenario resolve(const ScenarioConfig& config) {
  ResolvedScenario s{config, config.apparatus, {}, {}, ForceProfile::constant(0.0, 1.0), {}, 0.0};
  const SquidParams& sq = config.squid;
  s.apparatus.geometry_factor =
      config.geometry_factor ? *config.geometry_factor
                             : geometry_factor_estimate(sq.ring_width, sq.ring_length,
                                                        0.5 * sq.ring_width);
  s.bath = derive_bath(sq, s.apparatus, config.bath);
  s.spectrum = config.spectrum == SpectralKind::EffectiveSquid
                   ? SpectralFunction::effective_squid(s.bath.friction, s.bath.cutoff,
                                                       s.bath.cutoff2)
                   : SpectralFunction::sharp_cutoff(s.bath.friction, s.bath.effective_cutoff());
  const double f0 = config.profile.f0.value_or(s.bath.force_magnitude);
  s.profile = build_profile(config.profile, f0, s.duration());
  s.noise_weight = noise_kernel_high_t_weight(s.spectrum, s.apparatus.temperature);

  if (config.noise == NoiseChoice::None || s.noise_weight == 0) {
    s.noise = NoiseModel::none();
  } else if (config.noise == NoiseChoice::HighTemperature) {
    s.noise = NoiseModel::high_temperature(s.noise_weight);
  } else {
    s.noise = NoiseModel::quadrature_kernel(s.spectrum, s.apparatus.temperature, s.duration(),
                                            config.kernel_grid, config.quadrature);
  }
  return s;
}

std::vector<double> sample_times(double duration, int samples) {
  if (samples < 2) throw ParameterError("sample_times: need at least 2 samples");
  std::vector<double> t(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) t[static_cast<std::size_t>(i)] = duration * i / (samples - 1);
  t.back() = duration;
  return t;
}

CoherenceTrace run_trace(const ResolvedScenario& s, int threads) {
  CoherenceTrace trace;
  trace.times = sample_times(s.duration(), s.config.samples);
  const std::size_t n = trace.times.size();
  trace.z_plus.resize(n);
  trace.z_minus.resize(n);
  trace.width.resize(n);
  trace.h.resize(n);
  trace.coherence.resize(n);
  trace.sx.resize(n);
  parallel_for(static_cast<int>(n), threads, [&](int i) {
    const auto k = static_cast<std::size_t>(i);
    const double t = trace.times[k];
    if (t == 0) {
      trace.width[k] = s.sigma();
      trace.h[k] = trace.coherence[k] = trace.sx[k] = 1.0;
      return;
    }
    const CoeffSet c = make_coeff_set(t, s.mass(), s.gamma(), s.profile, s.noise);
    const double z = packet_center(s.profile, t, s.mass(), s.gamma());
    trace.z_plus[k] = z;
    trace.z_minus[k] = -z;
    trace.width[k] = packet_width(c, s.sigma());
    trace.h[k] = h_factor(c, s.sigma());
    trace.coherence[k] = coherence(c, s.sigma(), s.config.coherence_mode, s.config.quadrature);
    trace.sx[k] = sx_expectation(c, s.sigma());
  });
  trace.decoherence_time = scenario_decoherence_time(s);
  return trace;
}

std::optional<double> scenario_decoherence_time(const ResolvedScenario& s) {
  if (s.noise.kind == NoiseModel::Kind::None) return std::nullopt;
  DecoherenceSearch search;
  search.t_max = s.config.t_max;
  return decoherence_time(s.mass(), s.gamma(), s.sigma(),
                          NoiseModel::high_temperature(s.noise_weight), search);
}

std::vector<EstimateRow> estimate(const ResolvedScenario& s) {
  const DerivedBath& b = s.bath;
  return {
      {"effective_inductance", b.effective_inductance, "H"},
      {"geometry_factor", s.apparatus.geometry_factor, "1/m^3"},
      {"coupling", b.coupling, "N/Wb"},
      {"friction", b.friction, "kg/s"},
      {"cutoff", b.cutoff, "rad/s"},
      {"cutoff2", b.cutoff2, "rad/s"},
      {"damping_rate", b.damping_rate, "1/s"},
      {"relaxation_time", b.relaxation_time, "s"},
      {"force", b.force_magnitude, "N"},
      {"many_minima_ratio", many_minima_ratio(s.config.squid), "1"},
      {"many_minima", many_minima_check(s.config.squid) ? 1.0 : 0.0, "bool"},
      {"experiment_time", s.duration(), "s"},
      {"noise_weight", s.noise_weight, "kg^2/s^3"},
      {"high_temperature_margin",
       high_temperature_margin(s.apparatus.temperature, b.damping_rate), "1"},
  };
}

SweepAxis parse_sweep_axis(const std::string& text) {
  static const std::vector<std::string> names = {"temperature", "ring_width", "beam_velocity",
                                                 "eta_scale", "gamma_scale"};
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw ConfigError("sweep axis must look like name=values");
  SweepAxis axis;
  axis.name = text.substr(0, eq);
  if (std::find(names.begin(), names.end(), axis.name) == names.end()) {
    throw ConfigError("unknown sweep axis '" + axis.name + "'");
  }
  const std::string spec = text.substr(eq + 1);
  auto number = [&](const std::string& v) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v.size() || v.empty()) throw ConfigError("bad sweep value '" + v + "'");
    return x;
  };
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  const bool ranged = spec.rfind("log:", 0) == 0 || spec.rfind("lin:", 0) == 0;
  while (std::getline(ss, item, ranged ? ':' : ',')) parts.push_back(item);
  if (ranged) {
    if (parts.size() != 4) throw ConfigError("range must be log:lo:hi:n or lin:lo:hi:n");
    const double lo = number(parts[1]);
    const double hi = number(parts[2]);
    const double n = number(parts[3]);
    if (n < 2 || n != std::floor(n)) throw ConfigError("range needs an integer n >= 2");
    const bool log = parts[0] == "log";
    if (log && !(lo > 0 && hi > 0)) throw ConfigError("log range needs positive bounds");
    for (int i = 0; i < static_cast<int>(n); ++i) {
      const double u = i / (n - 1);
      axis.values.push_back(log ? std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)))
                                : lo + u * (hi - lo));
    }
    axis.values.front() = lo;
    axis.values.back() = hi;
  } else {
    for (const auto& p : parts) axis.values.push_back(number(p));
  }
  if (axis.values.empty()) throw ConfigError("sweep axis has no values");
  return axis;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& base, const std::vector<SweepAxis>& axes,
                                int threads) {
  if (axes.empty() || axes.size() > 2) throw ConfigError("a sweep takes one or two axes");
  std::size_t total = 1;
  for (const auto& a : axes) {
    if (a.values.empty()) throw ConfigError("sweep axis '" + a.name + "' is empty");
    total *= a.values.size();
    if (total > 1000000) throw ConfigError("sweep grid exceeds 1e6 points");
  }
  std::vector<SweepRow> rows(total);
  parallel_for(static_cast<int>(total), threads, [&](int index) {
    ScenarioConfig config = base;
    SweepRow& row = rows[static_cast<std::size_t>(index)];
    std::size_t rest = static_cast<std::size_t>(index);
    row.axis_values.resize(axes.size());
    for (std::size_t k = axes.size(); k-- > 0;) {
      const auto& axis = axes[k];
      const double v = axis.values[rest % axis.values.size()];
      rest /= axis.values.size();
      row.axis_values[k] = v;
      if (axis.name == "temperature") {
        config.apparatus.temperature = v;
      } else if (axis.name == "ring_width") {
        config.squid.ring_width = v;
      } else if (axis.name == "beam_velocity") {
        config.apparatus.beam_velocity = v;
      } else if (axis.name == "eta_scale") {
        config.bath.eta_scale = v;
      } else {
        config.bath.gamma_scale = v;
      }
    }
    const ResolvedScenario s = resolve(config);
    row.decoherence_time = scenario_decoherence_time(s);
    const CoeffSet c = make_coeff_set(s.duration(), s.mass(), s.gamma(), s.profile, s.noise);
    row.final_coherence = coherence(c, s.sigma(), config.coherence_mode, config.quadrature);
  });
  return rows;
}

std::vector<OracleRow> oracle_check(const ResolvedScenario& s) {
  std::vector<OracleRow> rows;
  const double scale = s.config.oracle_tolerance_scale;
  auto add = [&](std::string name, double achieved, double tolerance, std::string note) {
    const double tol = tolerance * scale;
    rows.push_back({std::move(name), achieved, tol, achieved <= tol, std::move(note)});
  };
  const double duration = s.duration();

  {
    // Trajectory: closed form against RK4 at every RK4 step.
    const oracle::Trajectory traj =
        oracle::classical_trajectory_rk4(s.profile, s.mass(), s.gamma(), duration / 2e4);
    double worst = 0, peak = 0;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      const double cf = packet_center(s.profile, traj.times[i], s.mass(), s.gamma());
      worst = std::max(worst, std::abs(cf - traj.position[i]));
      peak = std::max(peak, std::abs(traj.position[i]));
    }
    add("trajectory_rk4", peak > 0 ? worst / peak : worst, 1e-6,
        "max |z - z_rk4| / max |z_rk4|");
  }

  const std::vector<double> times = sample_times(duration, std::min(s.config.samples, 101));
  {
    // Bath switched off: closed-form coherence against the exact two-branch overlap.
    double worst = 0;
    for (double t : times) {
      if (t == 0) continue;
      const CoeffSet c = make_coeff_set(t, s.mass(), 0.0, s.profile, NoiseModel::none());
      const double ours = coherence(c, s.sigma(), CoherenceMode::ClosedFormHighT);
      const double exact = std::abs(oracle::noiseless_evolution(s.profile, s.mass(), s.sigma(), t));
      if (exact < 1e-280 && ours < 1e-280) continue;
      worst = std::max(worst, relative_gap(ours, exact));
    }
    add("noiseless_overlap", worst, 1e-6, "bath removed; |<psi-|psi+>| vs closed form");
  }
  {
    double worst = 0, truncation = 0;
    for (double t : times) {
      if (t == 0) continue;
      const CoeffSet c = make_coeff_set(t, s.mass(), s.gamma(), s.profile, s.noise);
      const double ours = coherence(c, s.sigma(), CoherenceMode::ClosedFormHighT);
      const oracle::TraceResult tr = oracle::trace_offdiag_numeric(c, s.sigma());
      if (std::abs(tr.value) < tr.resolution && ours < tr.resolution) continue;
      worst = std::max(worst, relative_gap(ours, std::abs(tr.value)));
      truncation = std::max(truncation, tr.truncation);
    }
    std::ostringstream note;
    note << "window truncation " << truncation;
    add("trace_offdiag", worst, 1e-4, note.str());
  }
  if (s.bath.friction > 0) {
    // Bath memory is resolved only over a window of a few hundred cycles.
    const double t = std::min(duration, 200.0 / s.spectrum.max_frequency());
    const double temperature = s.apparatus.temperature;
    const NoiseTerms q = coeff_abc_quadrature(t, s.gamma(), temperature, s.spectrum,
                                              s.config.quadrature, s.config.kernel_grid);
    const oracle::NoiseIntegrals bf = oracle::brute_force_abc(t, s.gamma(), temperature, s.spectrum);
    const double gap = std::max({relative_gap(q.final_term, bf.a), relative_gap(q.cross_term, bf.b),
                                 relative_gap(q.initial_term, bf.c)});
    std::ostringstream note;
    note << "t = " << t << " s";
    add("abc_quadrature_vs_brute_force", gap, 5e-3, note.str());

    const double rate = std::max(s.gamma(), 1.0 / t);
    if (constants::boltzmann * temperature >= 100.0 * constants::hbar * rate) {
      const NoiseTerms h = coeff_abc_high_t(t, s.gamma(), s.noise_weight);
      const double gap_h =
          std::max({relative_gap(q.final_term, h.final_term), relative_gap(q.cross_term, h.cross_term),
                    relative_gap(q.initial_term, h.initial_term)});
      add("abc_quadrature_vs_high_t", gap_h, 1e-2, note.str());
    } else {
      rows.push_back({"abc_quadrature_vs_high_t", 0, 0, true,
                      "skipped: k T < 100 hbar max(gamma, 1/t) at " + note.str()});
    }
  }
  return rows;
}

}  // namespace sgi
