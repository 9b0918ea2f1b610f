#include "wgswitch/adiabatic.hpp"

#include <cmath>
#include <sstream>

#include "wgswitch/errors.hpp"
#include "wgswitch/quadrature.hpp"

namespace wgswitch {
namespace {

Matrix2 phase_pair(double s) {
  return Matrix2::diagonal(std::polar(1.0, -s), std::polar(1.0, s));
}

double eigen_area(const TwoGuideModel& m, double z_a, double z_b) {
  const double delta = m.mismatch.one_sided(0.5 * (z_a + z_b));
  auto eps = [&m, delta](double z) { return std::hypot(m.coupling.value(z), delta); };
  return integrate(eps, z_a, z_b, 1e-12);
}

}  // namespace

double mixing_angle(double omega, double delta) {
  if (!std::isfinite(omega) || !std::isfinite(delta)) throw ConfigError("mixing_angle: non-finite input");
  if (omega < 0.0) throw ConfigError("mixing_angle: omega must be >= 0");
  if (omega == 0.0 && delta == 0.0) return 0.0;
  return 0.5 * std::atan2(omega, delta);
}

AdiabaticityMargin adiabaticity_margin(const TwoGuideModel& m, std::size_t n_samples) {
  m.validate();
  if (n_samples < 100) throw ConfigError("adiabaticity_margin: n_samples must be >= 100");
  AdiabaticityMargin out;
  const double span = m.z_max - m.z_min;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double z = m.z_min + span * (static_cast<double>(i) / static_cast<double>(n_samples - 1));
    if (z == 0.0) continue;
    const double omega = m.coupling.value(z);
    const double delta = m.mismatch.value(z);
    const double eps2 = omega * omega + delta * delta;
    if (eps2 == 0.0) {
      ++out.skipped;
      continue;
    }
    const double r = std::abs(m.coupling.derivative(z) * delta) / (eps2 * std::sqrt(eps2));
    if (r > out.value) {
      out.value = r;
      out.z_at_max = z;
    }
  }
  return out;
}

Propagator2 adiabatic_propagator(const TwoGuideModel& m) {
  m.validate();
  if (m.mismatch.kind != MismatchKind::StepFlip) throw ConfigError("adiabatic propagator needs a step-flip mismatch");
  const double omega0 = m.coupling.omega0;
  if (!(omega0 > 0.0)) throw ConfigError("adiabatic propagator needs omega0 > 0");

  const double limit = kBoundaryCouplingRatio * omega0;
  for (double z : {m.z_min, m.z_max}) {
    const double omega = m.coupling.value(z);
    if (omega > limit) {
      std::ostringstream os;
      os << "coupling at z = " << z << " is " << omega / omega0 << " of its peak, above " << kBoundaryCouplingRatio
         << "; widen the domain";
      throw BoundaryError(os.str());
    }
  }

  const double delta_minus = m.mismatch.one_sided(-1.0);
  const double delta_plus = m.mismatch.one_sided(1.0);
  const double theta_i = mixing_angle(0.0, delta_minus);
  const double theta_f = mixing_angle(0.0, delta_plus);
  const double theta_0m = mixing_angle(omega0, delta_minus);
  const double theta_0p = mixing_angle(omega0, delta_plus);
  const double s_minus = eigen_area(m, m.z_min, 0.0);
  const double s_plus = eigen_area(m, 0.0, m.z_max);

  Propagator2 u;
  u.entries = Matrix2::rotation(theta_f) * phase_pair(s_plus) * Matrix2::rotation(theta_0p).transpose() *
              Matrix2::rotation(theta_0m) * phase_pair(s_minus) * Matrix2::rotation(theta_i).transpose();
  u.z_a = m.z_min;
  u.z_b = m.z_max;
  return u;
}

double adiabatic_final_intensity(double omega0, double delta0) {
  if (!std::isfinite(omega0) || !std::isfinite(delta0))
    throw ConfigError("adiabatic_final_intensity: non-finite input");
  const double denom = omega0 * omega0 + delta0 * delta0;
  if (denom == 0.0) throw DegenerateError("adiabatic_final_intensity: omega0 = delta0 = 0");
  return omega0 * omega0 / denom;
}

}  // namespace wgswitch
