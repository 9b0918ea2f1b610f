#pragma once

// Numerical integration of the coupled-mode equations  i dC/dz = H(z) C
// for two and three guides. This is the reference every closed form in the
// library is tested against.

#include <cstddef>
#include <vector>

#include "wgswitch/linalg.hpp"
#include "wgswitch/model.hpp"

namespace wgswitch {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr std::size_t kDefaultSamples = 2001;

struct AmplitudeState {
  std::vector<Complex> amplitudes;  // length 2 or 3
  double z = 0.0;

  [[nodiscard]] double norm() const;  // sum |c_k|^2
  [[nodiscard]] double intensity(std::size_t k) const { return std::norm(amplitudes.at(k)); }
};

struct Trajectory {
  std::vector<AmplitudeState> samples;  // strictly increasing z
  std::size_t steps_accepted = 0;
  std::size_t steps_rejected = 0;

  [[nodiscard]] const AmplitudeState& final_state() const { return samples.back(); }
  [[nodiscard]] std::size_t guides() const { return samples.empty() ? 0 : samples.front().amplitudes.size(); }
  /// max over samples of | sum|c|^2 - initial norm |
  [[nodiscard]] double max_norm_drift() const;
};

/// Frame of the two-level amplitudes.
///   Diagonal:    H = [[h11, Omega], [Omega, h22]] per the model's convention.
///   Interaction: H = [[0, Omega e^{-i Phi}], [Omega e^{i Phi}, 0]] with
///                Phi(z) the running integral of h22 - h11 from z = 0.
/// Both frames give identical intensities; amplitudes differ by phases.
enum class Frame { Diagonal, Interaction };

/// Integrates from m.z_min to m.z_max starting at `initial` (which must sit
/// at z_min with unit norm) and returns n_samples equally spaced samples.
/// The integration is split at z = 0 so no step straddles the mismatch flip.
///
/// Throws ConfigError on an invalid model, tolerance outside [1e-14, 1e-6],
/// n_samples < 2 or a bad initial state; StepUnderflowError if the step
/// controller stalls.
Trajectory evolve_two(const TwoGuideModel& m, const AmplitudeState& initial, double tol = kDefaultTol,
                      std::size_t n_samples = kDefaultSamples, Frame frame = Frame::Diagonal);

/// Three-guide evolution with H = [[0, Omega, 0], [Omega, Delta, Omega], [0, Omega, 0]].
Trajectory evolve_three(const ThreeGuideModel& m, const AmplitudeState& initial, double tol = kDefaultTol,
                        std::size_t n_samples = kDefaultSamples);

/// Final amplitudes only; same contract as evolve_two with two samples.
AmplitudeState evolve_two_final(const TwoGuideModel& m, const AmplitudeState& initial, double tol = kDefaultTol,
                                Frame frame = Frame::Diagonal);

/// Columns are the images of (1, 0) and (0, 1) evolved over [z_a, z_b]
/// (diagonal frame).
Propagator2 propagator_numeric(const TwoGuideModel& m, double z_a, double z_b, double tol = kDefaultTol);

/// Convenience: |c_2(z_max)|^2 for light launched in guide 1.
double final_transfer(const TwoGuideModel& m, double tol = kDefaultTol, Frame frame = Frame::Diagonal);

}  // namespace wgswitch
