// Command-line front end: run, estimate, sweep, oracle-check.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgi/errors.hpp"
#include "sgi/pipeline.hpp"
#include "sgi/report.hpp"
#include "sgi/scenario.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitOracle = 4;

struct Common {
  std::string config;
  std::string preset;
  std::string out = ".";
  int samples = 0;
  int threads = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config, "scenario file (INI)");
  cmd->add_option("--preset", c.preset, "built-in scenario: paper-squid, noiseless, noisy-desk");
  cmd->add_option("--out", c.out, "output directory");
  cmd->add_option("--samples", c.samples, "number of time samples (overrides the scenario)")
      ->check(CLI::Range(2, 10000000));
  cmd->add_option("--threads", c.threads, "worker threads (0 = all cores)");
}

sgi::ScenarioConfig load(const Common& c) {
  if (!c.config.empty() && !c.preset.empty()) {
    throw sgi::ConfigError("give either --config or --preset, not both");
  }
  sgi::ScenarioConfig config = !c.config.empty() ? sgi::load_scenario(c.config)
                                                 : sgi::load_preset(c.preset.empty() ? "paper-squid" : c.preset);
  if (c.samples > 0) config.samples = c.samples;
  sgi::apply_environment(config);
  return config;
}

std::ofstream open_output(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  std::ofstream file(dir / name, std::ios::binary);
  if (!file) throw sgi::ConfigError("cannot write " + (dir / name).string());
  return file;
}

void write_units(const fs::path& dir) {
  auto file = open_output(dir, "units.txt");
  sgi::report::write_units(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stern-Gerlach interferometer coherence under a dissipative SQUID bath"};
  app.require_subcommand(1);

  Common run_opts, est_opts, sweep_opts, oracle_opts;
  bool svg = false;
  bool csv = false;
  std::vector<std::string> axes;

  CLI::App* run = app.add_subcommand("run", "write trace.csv (and trace.svg) for one scenario");
  add_common(run, run_opts);
  run->add_flag("--svg", svg, "also write trace.svg");

  CLI::App* est = app.add_subcommand("estimate", "print the derived circuit and bath parameters");
  add_common(est, est_opts);
  est->add_flag("--csv", csv, "print CSV instead of a table");

  CLI::App* sweep = app.add_subcommand("sweep", "tau and final coherence over a parameter grid");
  add_common(sweep, sweep_opts);
  sweep->add_option("--axis", axes, "name=v1,v2,... or name=log:lo:hi:n (one or two)")
      ->required();

  CLI::App* oracle = app.add_subcommand("oracle-check", "compare against brute-force oracles");
  add_common(oracle, oracle_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (run->parsed()) {
      const auto s = sgi::resolve(load(run_opts));
      const sgi::CoherenceTrace trace = sgi::run_trace(s, run_opts.threads);
      const fs::path dir = run_opts.out;
      {
        auto file = open_output(dir, "trace.csv");
        sgi::report::write_trace_csv(file, trace);
      }
      write_units(dir);
      if (svg) {
        auto file = open_output(dir, "trace.svg");
        sgi::report::write_trace_svg(file, trace);
      }
      std::cout << "samples           " << trace.times.size() << '\n'
                << "final h           " << sgi::report::format_number(trace.h.back()) << '\n'
                << "final coherence   " << sgi::report::format_number(trace.coherence.back()) << '\n'
                << "decoherence time  "
                << (trace.decoherence_time ? sgi::report::format_number(*trace.decoherence_time)
                                           : std::string("not reached"))
                << '\n';
    } else if (est->parsed()) {
      const auto s = sgi::resolve(load(est_opts));
      const auto rows = sgi::estimate(s);
      if (csv) {
        sgi::report::write_estimate_csv(std::cout, rows);
      } else {
        sgi::report::write_estimate_table(std::cout, rows);
      }
      if (est->count("--out")) {
        auto file = open_output(est_opts.out, "estimate.csv");
        sgi::report::write_estimate_csv(file, rows);
        write_units(est_opts.out);
      }
    } else if (sweep->parsed()) {
      const sgi::ScenarioConfig config = load(sweep_opts);
      std::vector<sgi::SweepAxis> parsed;
      for (const auto& a : axes) parsed.push_back(sgi::parse_sweep_axis(a));
      const auto rows = sgi::run_sweep(config, parsed, sweep_opts.threads);
      auto file = open_output(sweep_opts.out, "sweep.csv");
      sgi::report::write_sweep_csv(file, parsed, rows);
      write_units(sweep_opts.out);
      std::cout << "wrote " << rows.size() << " rows to "
                << (fs::path(sweep_opts.out) / "sweep.csv").string() << '\n';
    } else if (oracle->parsed()) {
      const auto s = sgi::resolve(load(oracle_opts));
      const auto rows = sgi::oracle_check(s);
      sgi::report::write_oracle_csv(std::cout, rows);
      if (oracle->count("--out")) {
        auto file = open_output(oracle_opts.out, "oracle.csv");
        sgi::report::write_oracle_csv(file, rows);
      }
      for (const auto& r : rows) {
        if (!r.passed) return kExitOracle;
      }
    }
  } catch (const sgi::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const sgi::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const sgi::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << " (achieved " << e.achieved_error() << ")\n";
    return kExitNumerical;
  } catch (const sgi::RegimeError& e) {
    std::cerr << "outside model regime: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
