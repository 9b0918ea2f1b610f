#include "wgswitch/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "wgswitch/errors.hpp"

namespace wgswitch::cli {
namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {
    "profile", "omega0_L", "delta0_L", "z_min_L", "z_max_L", "tol", "samples", "convention", "engine",
    "nx",      "ny",       "omega_min_L", "omega_max_L", "delta_min_L", "delta_max_L"};

double get_number(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number()) throw ConfigError(std::string("config key '") + key + "' must be a number");
  return v.get<double>();
}

std::size_t get_count(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ConfigError(std::string("config key '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string get_string(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_string()) throw ConfigError(std::string("config key '") + key + "' must be a string");
  return v.get<std::string>();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

bool finite(double x) { return std::isfinite(x); }

double grid_point(double lo, double hi, std::size_t i, std::size_t n) {
  if (i + 1 == n) return hi;
  return lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
}

}  // namespace

double GridConfig::omega_at(std::size_t i) const { return grid_point(omega_min_L, omega_max_L, i, nx); }
double GridConfig::delta_at(std::size_t j) const { return grid_point(delta_min_L, delta_max_L, j, ny); }

Engine parse_engine(const std::string& s) {
  if (s == "ode") return Engine::Ode;
  if (s == "analytic") return Engine::Analytic;
  if (s == "adiabatic") return Engine::Adiabatic;
  throw ConfigError("unknown engine '" + s + "' (expected ode, analytic or adiabatic)");
}

Convention parse_convention(const std::string& s) {
  if (s == "full") return Convention::Full;
  if (s == "half") return Convention::Half;
  throw ConfigError("unknown convention '" + s + "' (expected full or half)");
}

ProfileKind parse_profile(const std::string& s) {
  if (s == "sech") return ProfileKind::Sech;
  if (s == "gauss") return ProfileKind::Gaussian;
  throw ConfigError("unknown profile '" + s + "' (expected sech or gauss)");
}

const char* to_string(Engine e) {
  switch (e) {
    case Engine::Ode: return "ode";
    case Engine::Analytic: return "analytic";
    case Engine::Adiabatic: return "adiabatic";
  }
  return "?";
}

const char* to_string(Convention c) { return c == Convention::Full ? "full" : "half"; }

void RunConfig::validate() const {
  require(finite(omega0_L) && omega0_L >= 0.0, "omega0_L must be finite and >= 0");
  require(finite(delta0_L) && delta0_L >= 0.0, "delta0_L must be finite and >= 0");
  require(finite(z_min_L) && z_min_L < 0.0, "z_min_L must be finite and < 0");
  require(finite(z_max_L) && z_max_L > 0.0, "z_max_L must be finite and > 0");
  require(tol >= 1e-14 && tol <= 1e-6, "tol must lie in [1e-14, 1e-6]");
  require(samples >= 2 && samples <= 10'000'000, "samples must lie in [2, 10000000]");
  require(grid.nx >= 2 && grid.nx <= 100'000, "nx must lie in [2, 100000]");
  require(grid.ny >= 2 && grid.ny <= 100'000, "ny must lie in [2, 100000]");
  require(finite(grid.omega_min_L) && finite(grid.omega_max_L) && grid.omega_min_L >= 0.0 &&
              grid.omega_min_L <= grid.omega_max_L,
          "omega range must be finite with 0 <= omega_min_L <= omega_max_L");
  require(finite(grid.delta_min_L) && finite(grid.delta_max_L) && grid.delta_min_L >= 0.0 &&
              grid.delta_min_L <= grid.delta_max_L,
          "delta range must be finite with 0 <= delta_min_L <= delta_max_L");
}

TwoGuideModel RunConfig::two_guide(double omega0, double delta0) const {
  TwoGuideModel m;
  m.coupling = CouplingProfile{profile, omega0, 1.0};
  m.mismatch = MismatchProfile{MismatchKind::StepFlip, delta0};
  m.z_min = z_min_L;
  m.z_max = z_max_L;
  m.convention = convention == Convention::Full ? DiagonalConvention::FullDelta : DiagonalConvention::HalfDelta;
  return m;
}

ThreeGuideModel RunConfig::three_guide() const {
  ThreeGuideModel m;
  m.coupling = CouplingProfile{profile, omega0_L, 1.0};
  m.mismatch = MismatchProfile{MismatchKind::StepFlip, delta0_L};
  m.z_min = z_min_L;
  m.z_max = z_max_L;
  return m;
}

RunConfig parse_config(const json& j, RunConfig c) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kKnownKeys.count(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  if (j.contains("profile")) c.profile = parse_profile(get_string(j, "profile"));
  if (j.contains("omega0_L")) c.omega0_L = get_number(j, "omega0_L");
  if (j.contains("delta0_L")) c.delta0_L = get_number(j, "delta0_L");
  if (j.contains("z_min_L")) c.z_min_L = get_number(j, "z_min_L");
  if (j.contains("z_max_L")) c.z_max_L = get_number(j, "z_max_L");
  if (j.contains("tol")) c.tol = get_number(j, "tol");
  if (j.contains("samples")) c.samples = get_count(j, "samples");
  if (j.contains("convention")) c.convention = parse_convention(get_string(j, "convention"));
  if (j.contains("engine")) c.engine = parse_engine(get_string(j, "engine"));
  if (j.contains("nx")) c.grid.nx = get_count(j, "nx");
  if (j.contains("ny")) c.grid.ny = get_count(j, "ny");
  if (j.contains("omega_min_L")) c.grid.omega_min_L = get_number(j, "omega_min_L");
  if (j.contains("omega_max_L")) c.grid.omega_max_L = get_number(j, "omega_max_L");
  if (j.contains("delta_min_L")) c.grid.delta_min_L = get_number(j, "delta_min_L");
  if (j.contains("delta_max_L")) c.grid.delta_max_L = get_number(j, "delta_max_L");
  c.validate();
  return c;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(j, base);
}

json to_json(const RunConfig& c) {
  return json{{"profile", to_string(c.profile)},
              {"omega0_L", c.omega0_L},
              {"delta0_L", c.delta0_L},
              {"z_min_L", c.z_min_L},
              {"z_max_L", c.z_max_L},
              {"tol", c.tol},
              {"samples", c.samples},
              {"convention", to_string(c.convention)},
              {"engine", to_string(c.engine)},
              {"nx", c.grid.nx},
              {"ny", c.grid.ny},
              {"omega_min_L", c.grid.omega_min_L},
              {"omega_max_L", c.grid.omega_max_L},
              {"delta_min_L", c.grid.delta_min_L},
              {"delta_max_L", c.grid.delta_max_L}};
}

}  // namespace wgswitch::cli
