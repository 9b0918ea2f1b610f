#pragma once

// Adiabatic-following approximation of the two-guide coupler, written in the
// FullDelta symbols: eigenvalues +-eps with eps = sqrt(Omega^2 + Delta^2) and
// mixing angle theta = atan2(Omega, Delta) / 2.

#include <cstddef>

#include "wgswitch/linalg.hpp"
#include "wgswitch/model.hpp"

namespace wgswitch {

/// Couplings at either end of the domain must fall below this fraction of
/// omega0 for the adiabatic propagator to accept the model.
inline constexpr double kBoundaryCouplingRatio = 2e-5;

/// theta = atan2(omega, delta) / 2 in [0, pi/2]; 0 when both vanish.
/// Throws ConfigError if omega < 0 or either argument is not finite.
double mixing_angle(double omega, double delta);

struct AdiabaticityMargin {
  double value = 0.0;     // max |Omega' Delta| / (Omega^2 + Delta^2)^{3/2}
  double z_at_max = 0.0;  // where the maximum occurs
  std::size_t skipped = 0;  // samples with Omega = Delta = 0
};

/// Samples the non-adiabatic coupling on n_samples uniform points of the
/// model's domain (z = 0 itself is skipped). Throws ConfigError if
/// n_samples < 100.
AdiabaticityMargin adiabaticity_margin(const TwoGuideModel& m, std::size_t n_samples = 4001);

/// U_ad = R(theta_f) diag(e^{-i S+}, e^{i S+}) R(theta_0+)^T
///        R(theta_0-) diag(e^{-i S-}, e^{i S-}) R(theta_i)^T
/// with S-/S+ the integrals of eps over [z_min, 0] and [0, z_max] and the end
/// angles taken at zero coupling, theta_i = theta(0, Delta-), theta_f =
/// theta(0, Delta+). Requires a
/// StepFlip mismatch and omega0 > 0 (ConfigError) and a coupling that has
/// decayed at both ends (BoundaryError).
Propagator2 adiabatic_propagator(const TwoGuideModel& m);

/// Omega0^2 / (Omega0^2 + Delta0^2). Throws DegenerateError if both are 0.
double adiabatic_final_intensity(double omega0, double delta0);

}  // namespace wgswitch
