#pragma once

// Coupling and phase-mismatch profiles of two- and three-waveguide couplers.
//
// Lengths are measured in arbitrary but consistent units; rates (coupling,
// mismatch) in inverse units of the same length. Every result depends only
// on omega0 * width and delta0 * width.

#include <array>

namespace wgswitch {

enum class ProfileKind { Sech, Gaussian };
enum class MismatchKind { StepFlip, Constant };

/// Which diagonal the two-level evolution matrix carries for a mismatch D:
///   FullDelta  (-D, +D)
///   HalfDelta  (-D/2, +D/2), the splitting whose interaction-picture phase
///              is the running integral of D
///   SecondOnly (0, D), the bright/middle pair of the three-guide array
enum class DiagonalConvention { FullDelta, HalfDelta, SecondOnly };

struct CouplingProfile {
  ProfileKind kind = ProfileKind::Sech;
  double omega0 = 0.0;  // peak coupling
  double width = 1.0;   // L

  /// Sech: omega0 sech(z/L). Gaussian: omega0 exp(-z^2/L^2).
  [[nodiscard]] double value(double z) const;
  [[nodiscard]] double derivative(double z) const;
  void validate() const;
};

struct MismatchProfile {
  MismatchKind kind = MismatchKind::StepFlip;
  // Signed. StepFlip carries +delta0 for z < 0 and -delta0 for z > 0.
  double delta0 = 0.0;

  /// StepFlip is 0 at exactly z = 0; integrators never evaluate it there.
  [[nodiscard]] double value(double z) const;
  /// Running phase D(z), the integral of the mismatch from 0 to z.
  [[nodiscard]] double accumulated(double z) const;
  /// Value on the side of z = 0 selected by the sign of `side`.
  [[nodiscard]] double one_sided(double side) const;
  void validate() const;
};

struct TwoGuideModel {
  CouplingProfile coupling;
  MismatchProfile mismatch;
  double z_min = -12.0;
  double z_max = 12.0;
  DiagonalConvention convention = DiagonalConvention::FullDelta;

  /// Throws ConfigError unless z_min < 0 < z_max and both profiles are valid.
  void validate() const;
  /// Diagonal (h11, h22) of the evolution matrix at z.
  [[nodiscard]] std::array<double, 2> diagonal(double z) const;
  /// h22 - h11 as a multiple of the mismatch.
  [[nodiscard]] double splitting_factor() const;
};

/// Symmetric array: the middle guide couples to both outer guides with the
/// same Omega(z); the middle guide alone carries the mismatch.
struct ThreeGuideModel {
  CouplingProfile coupling;
  MismatchProfile mismatch;
  double z_min = -12.0;
  double z_max = 12.0;

  void validate() const;
};

template <class Model>
double coupling_at(const Model& m, double z) {
  return m.coupling.value(z);
}

template <class Model>
double mismatch_at(const Model& m, double z) {
  return m.mismatch.value(z);
}

/// Integral of the coupling over [z_a, z_b], relative accuracy 1e-10 or better.
double pulse_area(const CouplingProfile& c, double z_a, double z_b);

template <class Model>
double pulse_area(const Model& m, double z_a, double z_b) {
  return pulse_area(m.coupling, z_a, z_b);
}

/// D(z) referenced to the flip point z = 0. Throws ConfigError outside the
/// model's domain.
double accumulated_mismatch_phase(const TwoGuideModel& m, double z);
double accumulated_mismatch_phase(const ThreeGuideModel& m, double z);

const char* to_string(ProfileKind k);
const char* to_string(DiagonalConvention c);

}  // namespace wgswitch
