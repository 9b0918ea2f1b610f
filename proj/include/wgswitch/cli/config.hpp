#pragma once

// Run configuration for the command-line tool. All quantities are
// dimensionless: lengths in units of L, rates in units of 1/L.

#include <cstddef>
#include <string>

#include <json.hpp>

#include "wgswitch/model.hpp"

namespace wgswitch::cli {

enum class Engine { Ode, Analytic, Adiabatic };
enum class Convention { Full, Half };

struct GridConfig {
  std::size_t nx = 61;  // points along omega0_L
  std::size_t ny = 51;  // points along delta0_L
  double omega_min_L = 0.0;
  double omega_max_L = 60.0;
  double delta_min_L = 0.0;
  double delta_max_L = 5.0;

  [[nodiscard]] double omega_at(std::size_t i) const;
  [[nodiscard]] double delta_at(std::size_t j) const;
};

struct RunConfig {
  ProfileKind profile = ProfileKind::Sech;
  double omega0_L = 50.0;
  double delta0_L = 2.0;
  double z_min_L = -12.0;
  double z_max_L = 12.0;
  double tol = 1e-12;
  std::size_t samples = 2001;
  Convention convention = Convention::Full;
  Engine engine = Engine::Ode;
  GridConfig grid;

  /// Throws ConfigError naming the first offending field.
  void validate() const;

  [[nodiscard]] TwoGuideModel two_guide(double omega0_L, double delta0_L) const;
  [[nodiscard]] TwoGuideModel two_guide() const { return two_guide(omega0_L, delta0_L); }
  [[nodiscard]] ThreeGuideModel three_guide() const;
};

/// Strict parse: unknown keys, wrong JSON types and out-of-range values throw
/// ConfigError. Missing keys keep their defaults.
RunConfig parse_config(const nlohmann::json& j, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

nlohmann::json to_json(const RunConfig& c);

Engine parse_engine(const std::string& s);
Convention parse_convention(const std::string& s);
ProfileKind parse_profile(const std::string& s);
const char* to_string(Engine e);
const char* to_string(Convention c);

}  // namespace wgswitch::cli
