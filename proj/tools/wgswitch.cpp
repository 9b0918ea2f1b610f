// wgswitch: two- and three-waveguide coupler simulations from the command line.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wgswitch/cli/commands.hpp"
#include "wgswitch/cli/config.hpp"
#include "wgswitch/cli/sweep.hpp"
#include "wgswitch/errors.hpp"

namespace {

using namespace wgswitch;
using namespace wgswitch::cli;

struct Overrides {
  std::optional<std::string> profile, convention, engine;
  std::optional<double> omega0, delta0, zmin, zmax, tol;
  std::optional<double> omega_min, omega_max, delta_min, delta_max;
  std::optional<std::size_t> samples, nx, ny;
};

void add_config_options(CLI::App& app, std::string& config_path, Overrides& o) {
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--profile", o.profile, "coupling profile: sech | gauss");
  app.add_option("--omega0-L", o.omega0, "peak coupling times L");
  app.add_option("--delta0-L", o.delta0, "mismatch magnitude times L");
  app.add_option("--zmin-L", o.zmin, "start of the domain in units of L");
  app.add_option("--zmax-L", o.zmax, "end of the domain in units of L");
  app.add_option("--tol", o.tol, "integrator tolerance");
  app.add_option("--samples", o.samples, "trajectory samples");
  app.add_option("--convention", o.convention, "two-level diagonal: full | half");
  app.add_option("--engine", o.engine, "ode | analytic | adiabatic");
  app.add_option("--nx", o.nx, "grid points along omega0_L");
  app.add_option("--ny", o.ny, "grid points along delta0_L");
  app.add_option("--omega-min-L", o.omega_min);
  app.add_option("--omega-max-L", o.omega_max);
  app.add_option("--delta-min-L", o.delta_min);
  app.add_option("--delta-max-L", o.delta_max);
}

RunConfig resolve(const std::string& config_path, const Overrides& o) {
  RunConfig c;
  if (!config_path.empty()) c = load_config_file(config_path);
  nlohmann::json patch = nlohmann::json::object();
  if (o.profile) patch["profile"] = *o.profile;
  if (o.omega0) patch["omega0_L"] = *o.omega0;
  if (o.delta0) patch["delta0_L"] = *o.delta0;
  if (o.zmin) patch["z_min_L"] = *o.zmin;
  if (o.zmax) patch["z_max_L"] = *o.zmax;
  if (o.tol) patch["tol"] = *o.tol;
  if (o.samples) patch["samples"] = *o.samples;
  if (o.convention) patch["convention"] = *o.convention;
  if (o.engine) patch["engine"] = *o.engine;
  if (o.nx) patch["nx"] = *o.nx;
  if (o.ny) patch["ny"] = *o.ny;
  if (o.omega_min) patch["omega_min_L"] = *o.omega_min;
  if (o.omega_max) patch["omega_max_L"] = *o.omega_max;
  if (o.delta_min) patch["delta_min_L"] = *o.delta_min;
  if (o.delta_max) patch["delta_max_L"] = *o.delta_max;
  return parse_config(patch, c);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw ConfigError("failed writing '" + path + "'");
}

int report_error(const char* kind, const std::string& message, int code, bool as_json) {
  if (as_json) {
    std::cerr << nlohmann::json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump() << "\n";
  } else {
    std::cerr << "wgswitch: " << kind << " error: " << message << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Waveguide coupler switching simulations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_path, summary_path;
  Overrides o;
  bool error_json = false;
  bool dark = false;
  std::vector<std::string> engines = kCompareEngines;
  std::optional<std::size_t> threads;

  add_config_options(app, config_path, o);
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_flag("--error-json", error_json, "report errors as JSON on stderr");
  app.add_option("--threads", threads, "worker count (default: WGSWITCH_THREADS or all cores)");

  CLI::App* run = app.add_subcommand("run", "two-guide trajectory CSV");
  CLI::App* sweep = app.add_subcommand("sweep", "final I2 over an (omega0_L, delta0_L) grid");
  CLI::App* compare = app.add_subcommand("compare", "engine discrepancy map and summary");
  compare->add_option("--engines", engines, "subset of ode_full ode_half analytic adiabatic")->delimiter(',');
  compare->add_option("--summary", summary_path, "summary JSON file");
  CLI::App* splitter = app.add_subcommand("splitter", "three-guide trajectory CSV");
  splitter->add_flag("--dark", dark, "launch the dark combination (c1 - c3)/sqrt(2)");
  CLI::App* check = app.add_subcommand("check-adiabatic", "adiabaticity report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    const RunConfig c = resolve(config_path, o);
    const std::size_t n_threads = threads ? std::max<std::size_t>(*threads, 1) : default_thread_count();
    CommandOutput res;
    if (run->parsed()) {
      res = cmd_run(c);
    } else if (sweep->parsed()) {
      res = cmd_sweep(c, n_threads);
    } else if (compare->parsed()) {
      res = cmd_compare(c, engines, n_threads);
    } else if (splitter->parsed()) {
      res = cmd_splitter(c, dark);
    } else if (check->parsed()) {
      res = cmd_check_adiabatic(c);
    }

    if (check->parsed()) {
      if (out_path.empty()) std::cout << res.summary;
      else write_file(out_path, res.summary);
      return res.exit_code;
    }
    // CSV to --out or stdout; the summary goes to --summary, else to stdout
    // when the CSV went to a file, else to stderr.
    if (out_path.empty()) std::cout << res.csv;
    else write_file(out_path, res.csv);
    if (!summary_path.empty()) write_file(summary_path, res.summary);
    else (out_path.empty() ? std::cerr : std::cout) << res.summary;
    return res.exit_code;
  } catch (const ConfigError& e) {
    return report_error("config", e.what(), kExitConfig, error_json);
  } catch (const NumericalError& e) {
    return report_error("numerical", e.what(), kExitNumerical, error_json);
  } catch (const std::exception& e) {
    return report_error("numerical", e.what(), kExitNumerical, error_json);
  }
}
