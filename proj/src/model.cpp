#include "wgswitch/model.hpp"

#include <cmath>
#include <sstream>

#include "wgswitch/errors.hpp"
#include "wgswitch/quadrature.hpp"

namespace wgswitch {
namespace {

void check_domain(double z_min, double z_max) {
  if (!std::isfinite(z_min) || !std::isfinite(z_max) || !(z_min < 0.0 && 0.0 < z_max)) {
    std::ostringstream os;
    os << "domain must satisfy z_min < 0 < z_max, got [" << z_min << ", " << z_max << "]";
    throw ConfigError(os.str());
  }
}

void check_in_domain(double z, double z_min, double z_max) {
  if (!(z >= z_min && z <= z_max)) {
    std::ostringstream os;
    os << "z = " << z << " outside [" << z_min << ", " << z_max << "]";
    throw ConfigError(os.str());
  }
}

}  // namespace

double CouplingProfile::value(double z) const {
  const double u = z / width;
  switch (kind) {
    case ProfileKind::Sech:
      // 1/cosh overflows gracefully to 0 for |u| > ~710
      return omega0 / std::cosh(u);
    case ProfileKind::Gaussian:
      return omega0 * std::exp(-u * u);
  }
  return 0.0;
}

double CouplingProfile::derivative(double z) const {
  const double u = z / width;
  switch (kind) {
    case ProfileKind::Sech:
      return -omega0 * std::tanh(u) / std::cosh(u) / width;
    case ProfileKind::Gaussian:
      return -2.0 * u / width * omega0 * std::exp(-u * u);
  }
  return 0.0;
}

void CouplingProfile::validate() const {
  if (!std::isfinite(omega0) || omega0 < 0.0) throw ConfigError("coupling peak omega0 must be finite and >= 0");
  if (!std::isfinite(width) || width <= 0.0) throw ConfigError("coupling width L must be finite and > 0");
}

double MismatchProfile::value(double z) const {
  switch (kind) {
    case MismatchKind::StepFlip:
      if (z < 0.0) return delta0;
      if (z > 0.0) return -delta0;
      return 0.0;
    case MismatchKind::Constant:
      return delta0;
  }
  return 0.0;
}

double MismatchProfile::accumulated(double z) const {
  switch (kind) {
    case MismatchKind::StepFlip:
      return -delta0 * std::abs(z);
    case MismatchKind::Constant:
      return delta0 * z;
  }
  return 0.0;
}

double MismatchProfile::one_sided(double side) const { return value(side < 0.0 ? -1.0 : 1.0); }

void MismatchProfile::validate() const {
  if (!std::isfinite(delta0)) throw ConfigError("mismatch delta0 must be finite");
}

void TwoGuideModel::validate() const {
  coupling.validate();
  mismatch.validate();
  check_domain(z_min, z_max);
}

std::array<double, 2> TwoGuideModel::diagonal(double z) const {
  const double d = mismatch.value(z);
  switch (convention) {
    case DiagonalConvention::FullDelta:
      return {-d, d};
    case DiagonalConvention::HalfDelta:
      return {-0.5 * d, 0.5 * d};
    case DiagonalConvention::SecondOnly:
      return {0.0, d};
  }
  return {0.0, 0.0};
}

double TwoGuideModel::splitting_factor() const { return convention == DiagonalConvention::FullDelta ? 2.0 : 1.0; }

void ThreeGuideModel::validate() const {
  coupling.validate();
  mismatch.validate();
  check_domain(z_min, z_max);
}

double pulse_area(const CouplingProfile& c, double z_a, double z_b) {
  if (!(z_a <= z_b)) throw ConfigError("pulse_area requires z_a <= z_b");
  if (c.omega0 == 0.0) return 0.0;
  auto f = [&c](double z) { return c.value(z); };
  // both profiles peak at 0; splitting there keeps each panel monotone
  if (z_a < 0.0 && z_b > 0.0) return integrate(f, z_a, 0.0, 1e-13) + integrate(f, 0.0, z_b, 1e-13);
  return integrate(f, z_a, z_b, 1e-13);
}

double accumulated_mismatch_phase(const TwoGuideModel& m, double z) {
  check_in_domain(z, m.z_min, m.z_max);
  return m.mismatch.accumulated(z);
}

double accumulated_mismatch_phase(const ThreeGuideModel& m, double z) {
  check_in_domain(z, m.z_min, m.z_max);
  return m.mismatch.accumulated(z);
}

const char* to_string(ProfileKind k) { return k == ProfileKind::Sech ? "sech" : "gauss"; }

const char* to_string(DiagonalConvention c) {
  switch (c) {
    case DiagonalConvention::FullDelta:
      return "full";
    case DiagonalConvention::HalfDelta:
      return "half";
    case DiagonalConvention::SecondOnly:
      return "second-only";
  }
  return "?";
}

}  // namespace wgswitch
