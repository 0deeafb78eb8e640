#include "sgi/scenario.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "sgi/errors.hpp"

namespace sgi {

namespace {

struct PresetEntry {
  const char* name;
  const char* text;
};

// Generated at configure time from presets/*.ini.
constexpr PresetEntry kPresets[] = {
#include "presets.inc"
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double to_double(const std::string& value, int line) {
  if (value.empty()) throw ConfigError("empty value", line);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(value.c_str(), &end);
  if (end != value.c_str() + value.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError("not a finite number: '" + value + "'", line);
  }
  return v;
}

int to_int(const std::string& value, int line) {
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(value.c_str(), &end, 10);
  if (value.empty() || end != value.c_str() + value.size() || errno == ERANGE ||
      v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ConfigError("not an integer: '" + value + "'", line);
  }
  return static_cast<int>(v);
}

std::vector<ForceSegment> to_segments(const std::string& value, int line) {
  std::vector<ForceSegment> out;
  std::stringstream all(value);
  std::string item;
  while (std::getline(all, item, ';')) {
    if (trim(item).empty()) continue;
    std::stringstream fields(item);
    std::string a, b, c, extra;
    if (!(fields >> a >> b >> c) || (fields >> extra)) {
      throw ConfigError("segment needs 't_start t_end force': '" + trim(item) + "'", line);
    }
    out.push_back({to_double(a, line), to_double(b, line), to_double(c, line)});
  }
  if (out.empty()) throw ConfigError("segments list is empty", line);
  return out;
}

using Setter = std::function<void(ScenarioConfig&, const std::string&, int)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    auto real = [&t](const std::string& key, auto project) {
      t[key] = [project](ScenarioConfig& c, const std::string& v, int line) {
        project(c) = to_double(v, line);
      };
    };
    real("squid.capacitance", [](ScenarioConfig& c) -> double& { return c.squid.capacitance; });
    real("squid.inductance", [](ScenarioConfig& c) -> double& { return c.squid.inductance; });
    real("squid.critical_current",
         [](ScenarioConfig& c) -> double& { return c.squid.critical_current; });
    real("squid.resistance", [](ScenarioConfig& c) -> double& { return c.squid.resistance; });
    real("squid.ring_width", [](ScenarioConfig& c) -> double& { return c.squid.ring_width; });
    real("squid.ring_length", [](ScenarioConfig& c) -> double& { return c.squid.ring_length; });
    t["squid.flux_index"] = [](ScenarioConfig& c, const std::string& v, int line) {
      c.squid.flux_index = to_int(v, line);
    };
    t["squid.effective_inductance"] = [](ScenarioConfig& c, const std::string& v, int line) {
      if (v == "auto") {
        c.squid.effective_inductance.reset();
      } else {
        c.squid.effective_inductance = to_double(v, line);
      }
    };

    t["apparatus.geometry_factor"] = [](ScenarioConfig& c, const std::string& v, int line) {
      if (v == "auto") {
        c.geometry_factor.reset();
      } else {
        c.geometry_factor = to_double(v, line);
      }
    };
    real("apparatus.magnetic_moment",
         [](ScenarioConfig& c) -> double& { return c.apparatus.magnetic_moment; });
    real("apparatus.mass", [](ScenarioConfig& c) -> double& { return c.apparatus.particle_mass; });
    real("apparatus.initial_width",
         [](ScenarioConfig& c) -> double& { return c.apparatus.initial_width; });
    real("apparatus.beam_velocity",
         [](ScenarioConfig& c) -> double& { return c.apparatus.beam_velocity; });
    real("apparatus.length",
         [](ScenarioConfig& c) -> double& { return c.apparatus.apparatus_length; });
    real("apparatus.temperature",
         [](ScenarioConfig& c) -> double& { return c.apparatus.temperature; });

    real("bath.eta_scale", [](ScenarioConfig& c) -> double& { return c.bath.eta_scale; });
    real("bath.gamma_scale", [](ScenarioConfig& c) -> double& { return c.bath.gamma_scale; });
    real("bath.damping_convention",
         [](ScenarioConfig& c) -> double& { return c.bath.damping_convention; });
    t["bath.noise"] = [](ScenarioConfig& c, const std::string& v, int line) {
      if (v == "high_t") {
        c.noise = NoiseChoice::HighTemperature;
      } else if (v == "quadrature") {
        c.noise = NoiseChoice::Quadrature;
      } else if (v == "none") {
        c.noise = NoiseChoice::None;
      } else {
        throw ConfigError("noise must be high_t, quadrature or none", line);
      }
    };
    t["bath.spectrum"] = [](ScenarioConfig& c, const std::string& v, int line) {
      if (v == "squid") {
        c.spectrum = SpectralKind::EffectiveSquid;
      } else if (v == "sharp") {
        c.spectrum = SpectralKind::SharpCutoffOhmic;
      } else {
        throw ConfigError("spectrum must be squid or sharp", line);
      }
    };

    t["profile.shape"] = [](ScenarioConfig& c, const std::string& v, int line) {
      if (v == "balanced4") {
        c.profile.kind = ProfileSpec::Kind::Balanced4;
      } else if (v == "constant") {
        c.profile.kind = ProfileSpec::Kind::Constant;
      } else if (v == "segments") {
        c.profile.kind = ProfileSpec::Kind::Segments;
      } else {
        throw ConfigError("shape must be balanced4, constant or segments", line);
      }
    };
    t["profile.f0"] = [](ScenarioConfig& c, const std::string& v, int line) {
      if (v == "auto") {
        c.profile.f0.reset();
      } else {
        c.profile.f0 = to_double(v, line);
      }
    };
    t["profile.segments"] = [](ScenarioConfig& c, const std::string& v, int line) {
      c.profile.segments = to_segments(v, line);
    };

    t["run.samples"] = [](ScenarioConfig& c, const std::string& v, int line) {
      c.samples = to_int(v, line);
      if (c.samples < 2) throw ConfigError("samples must be >= 2", line);
    };
    t["run.coherence"] = [](ScenarioConfig& c, const std::string& v, int line) {
      if (v == "closed_form") {
        c.coherence_mode = CoherenceMode::ClosedFormHighT;
      } else if (v == "trace_integral") {
        c.coherence_mode = CoherenceMode::TraceIntegral;
      } else {
        throw ConfigError("coherence must be closed_form or trace_integral", line);
      }
    };
    real("run.t_max", [](ScenarioConfig& c) -> double& { return c.t_max; });
    real("run.quadrature_tolerance",
         [](ScenarioConfig& c) -> double& { return c.quadrature.relative_tolerance; });
    t["run.quadrature_nodes"] = [](ScenarioConfig& c, const std::string& v, int line) {
      c.quadrature.node_count = to_int(v, line);
    };
    t["run.kernel_grid"] = [](ScenarioConfig& c, const std::string& v, int line) {
      c.kernel_grid = to_int(v, line);
      if (c.kernel_grid < 4) throw ConfigError("kernel_grid must be >= 4", line);
    };
    real("oracle.tolerance_scale",
         [](ScenarioConfig& c) -> double& { return c.oracle_tolerance_scale; });
    return t;
  }();
  return table;
}

// Checks that need more than one key, reported against the file as a whole.
void check(const ScenarioConfig& c) {
  try {
    validate(c.squid);
    validate(c.apparatus);
    validate(c.quadrature);
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  if (c.geometry_factor && !(*c.geometry_factor > 0)) {
    throw ConfigError("geometry_factor must be > 0");
  }
  if (!(c.bath.eta_scale >= 0) || !(c.bath.gamma_scale >= 0) || !(c.bath.damping_convention > 0)) {
    throw ConfigError("eta_scale and gamma_scale must be >= 0, damping_convention > 0");
  }
  if (!(c.t_max > 0)) throw ConfigError("t_max must be > 0");
  if (!(c.oracle_tolerance_scale >= 0)) throw ConfigError("tolerance_scale must be >= 0");
  if (c.profile.kind == ProfileSpec::Kind::Segments && c.profile.segments.empty()) {
    throw ConfigError("shape = segments needs a segments list");
  }
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view text, const std::string& origin) {
  ScenarioConfig config;
  config.name = origin;
  std::string section;
  std::set<std::string> seen;
  std::stringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(std::string_view(raw).substr(0, hash));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') throw ConfigError("unterminated section header", line);
      section = trim(std::string_view(body).substr(1, body.size() - 2));
      static const std::set<std::string> known = {"squid", "apparatus", "bath",
                                                  "profile", "run", "oracle"};
      if (!known.count(section)) throw ConfigError("unknown section [" + section + "]", line);
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line);
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (section.empty()) throw ConfigError("key '" + key + "' outside any section", line);
    const std::string full = section + "." + key;
    const auto it = setters().find(full);
    if (it == setters().end()) throw ConfigError("unknown key '" + key + "' in [" + section + "]", line);
    if (!seen.insert(full).second) throw ConfigError("duplicate key '" + key + "'", line);
    it->second(config, value, line);
  }
  check(config);
  return config;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << file.rdbuf();
  try {
    return parse_scenario(buffer.str(), path.stem().string());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : kPresets) names.emplace_back(p.name);
  return names;
}

std::string preset_text(const std::string& name) {
  for (const auto& p : kPresets) {
    if (name == p.name) return p.text;
  }
  throw ConfigError("unknown preset '" + name + "'");
}

ScenarioConfig load_preset(const std::string& name) {
  return parse_scenario(preset_text(name), name);
}

void apply_environment(ScenarioConfig& config) {
  const char* tol = std::getenv("SGI_QUAD_TOL");
  if (tol == nullptr) return;
  const double v = to_double(trim(tol), 0);
  config.quadrature.relative_tolerance = v;
  try {
    validate(config.quadrature);
  } catch (const ParameterError& e) {
    throw ConfigError(std::string("SGI_QUAD_TOL: ") + e.what());
  }
}

}  // namespace sgi
