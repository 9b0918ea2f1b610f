#pragma once

// Subcommands of the wgswitch tool as library calls. Each returns its
// artifacts as strings; the executable decides where they go.

#include <cstddef>
#include <string>
#include <vector>

#include "wgswitch/cli/config.hpp"

namespace wgswitch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitPartial = 4;

struct CommandOutput {
  std::string csv;
  std::string summary;  // one-line text or JSON, depending on the command
  int exit_code = kExitOk;
};

/// Two-guide trajectory CSV (engine must be ode), light launched in guide 1.
CommandOutput cmd_run(const RunConfig& c);

/// Final I2 on the configured grid with the configured engine. Failed points
/// are written as nan and set exit code 4.
CommandOutput cmd_sweep(const RunConfig& c, std::size_t threads);

/// Engines accepted by compare.
inline const std::vector<std::string> kCompareEngines = {"ode_full", "ode_half", "analytic", "adiabatic"};

/// Per-point I2 for each selected engine plus signed pairwise differences;
/// summary is JSON with max/mean |diff| per pair over the plane and the
/// adiabatic corner, the convention that best matches the closed form, and
/// a report on the zero-mismatch row.
CommandOutput cmd_compare(const RunConfig& c, const std::vector<std::string>& engines, std::size_t threads);

/// Three-guide trajectory CSV, light launched in the middle guide, or in the
/// dark combination (c1 - c3)/sqrt(2) when `dark` is set.
CommandOutput cmd_splitter(const RunConfig& c, bool dark);

/// JSON report: adiabaticity margin, pulse area, adiabatic prediction and ODE
/// final intensity.
CommandOutput cmd_check_adiabatic(const RunConfig& c);

/// Corner of the plane where the closed form is expected to hold.
bool in_adiabatic_corner(double omega0_L, double delta0_L);

}  // namespace wgswitch::cli
