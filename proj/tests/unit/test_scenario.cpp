#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sgi/errors.hpp"
#include "sgi/scenario.hpp"

using namespace sgi;

namespace {

int error_line(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("empty text gives the defaults") {
  const ScenarioConfig c = parse_scenario("");
  CHECK(c.noise == NoiseChoice::HighTemperature);
  CHECK(c.spectrum == SpectralKind::SharpCutoffOhmic);
  CHECK(c.profile.kind == ProfileSpec::Kind::Balanced4);
  CHECK_FALSE(c.profile.f0.has_value());
  CHECK_FALSE(c.geometry_factor.has_value());
  CHECK(c.samples == 201);
}

TEST_CASE("every section parses") {
  const ScenarioConfig c = parse_scenario(R"(
# comment
[squid]
capacitance = 2e-12
inductance = 3e-10
critical_current = 0
resistance = 0.5
flux_index = 2
ring_width = 2e-5
ring_length = 4e-3
effective_inductance = auto

[apparatus]
geometry_factor = 5e12
magnetic_moment = 1e-23
mass = 2e-25
initial_width = 3e-7
beam_velocity = 500
length = 2e-3
temperature = 0.2

[bath]
eta_scale = 3
gamma_scale = 0.5
damping_convention = 1
noise = quadrature
spectrum = squid

[profile]
shape = segments
segments = 0 1e-6 2e-20; 1e-6 4e-6 -1e-20

[run]
samples = 17
coherence = trace_integral
t_max = 1e7
quadrature_tolerance = 1e-8
quadrature_nodes = 20
kernel_grid = 1000

[oracle]
tolerance_scale = 2
)");
  CHECK(c.squid.capacitance == 2e-12);
  CHECK(c.squid.flux_index == 2);
  CHECK_FALSE(c.squid.effective_inductance.has_value());
  CHECK(c.geometry_factor.value() == 5e12);
  CHECK(c.apparatus.particle_mass == 2e-25);
  CHECK(c.apparatus.apparatus_length == 2e-3);
  CHECK(c.bath.eta_scale == 3);
  CHECK(c.bath.damping_convention == 1);
  CHECK(c.noise == NoiseChoice::Quadrature);
  CHECK(c.spectrum == SpectralKind::EffectiveSquid);
  REQUIRE(c.profile.segments.size() == 2);
  CHECK(c.profile.segments[1].t_end == 4e-6);
  CHECK(c.profile.segments[1].force == -1e-20);
  CHECK(c.samples == 17);
  CHECK(c.coherence_mode == CoherenceMode::TraceIntegral);
  CHECK(c.t_max == 1e7);
  CHECK(c.quadrature.relative_tolerance == 1e-8);
  CHECK(c.quadrature.node_count == 20);
  CHECK(c.kernel_grid == 1000);
  CHECK(c.oracle_tolerance_scale == 2);
}

TEST_CASE("errors carry the line number") {
  CHECK(error_line("[squid]\ncapacitance = 1e-12\n\nbogus = 1\n") == 4);
  CHECK(error_line("[squid]\n[nowhere]\n") == 2);
  CHECK(error_line("capacitance = 1\n") == 1);
  CHECK(error_line("[run]\nsamples = 10\nsamples = 11\n") == 3);
  CHECK(error_line("[run]\nsamples = ten\n") == 2);
  CHECK(error_line("[run]\nsamples = 2.5\n") == 2);
  CHECK(error_line("[run]\nsamples = 1\n") == 2);
  CHECK(error_line("[bath]\nnoise = loud\n") == 2);
  CHECK(error_line("[apparatus]\nmass = nan\n") == 2);
  CHECK(error_line("[apparatus]\nmass\n") == 2);
  CHECK(error_line("[profile\n") == 1);
  CHECK(error_line("[profile]\nsegments = 0 1\n") == 2);
  try {
    parse_scenario("[squid]\nwidht = 1\n", "my.ini");
    FAIL("no error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("widht") != std::string::npos);
  }
}

TEST_CASE("whole-file checks") {
  CHECK_THROWS_AS(parse_scenario("[profile]\nshape = segments\n"), ConfigError);
  CHECK_THROWS_AS(parse_scenario("[apparatus]\ngeometry_factor = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse_scenario("[bath]\neta_scale = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse_scenario("[apparatus]\nmass = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse_scenario("[oracle]\ntolerance_scale = -1\n"), ConfigError);
  CHECK_NOTHROW(parse_scenario("[oracle]\ntolerance_scale = 0\n"));
  CHECK_NOTHROW(parse_scenario("[squid]\ncritical_current = 0\n"));
}

TEST_CASE("presets match the shipped files") {
  const auto names = preset_names();
  REQUIRE(names.size() == 3);
  for (const auto& name : names) {
    CAPTURE(name);
    CHECK(preset_text(name) == read_file(std::string(SGI_PRESET_DIR) + "/" + name + ".ini"));
    CHECK_NOTHROW(load_preset(name));
    const ScenarioConfig a = load_preset(name);
    const ScenarioConfig b = load_scenario(std::string(SGI_PRESET_DIR) + "/" + name + ".ini");
    CHECK(a.samples == b.samples);
    CHECK(a.apparatus.initial_width == b.apparatus.initial_width);
  }
  CHECK_THROWS_AS(load_preset("nope"), ConfigError);
  CHECK_THROWS_AS(load_scenario("/nonexistent/x.ini"), ConfigError);

  const ScenarioConfig paper = load_preset("paper-squid");
  CHECK(paper.squid.effective_inductance.value() == 1e-10);
  CHECK(paper.apparatus.temperature == 0.1);
  CHECK(paper.apparatus.initial_width == 1e-6);
  const ScenarioConfig quiet = load_preset("noiseless");
  CHECK(quiet.noise == NoiseChoice::None);
  CHECK(quiet.bath.eta_scale == 0);
}

TEST_CASE("quadrature tolerance from the environment") {
  ScenarioConfig c;
  ::setenv("SGI_QUAD_TOL", "1e-7", 1);
  apply_environment(c);
  CHECK(c.quadrature.relative_tolerance == 1e-7);
  ::setenv("SGI_QUAD_TOL", "fast", 1);
  CHECK_THROWS_AS(apply_environment(c), ConfigError);
  ::setenv("SGI_QUAD_TOL", "-1", 1);
  CHECK_THROWS_AS(apply_environment(c), ConfigError);
  ::unsetenv("SGI_QUAD_TOL");
  ScenarioConfig d;
  apply_environment(d);
  CHECK(d.quadrature.relative_tolerance == QuadratureSpec{}.relative_tolerance);
}

}
