#pragma once

// Three-guide beam splitter. In the bright/dark basis
//   c_b = (c_1 + c_3) / sqrt(2),  c_d = (c_1 - c_3) / sqrt(2)
// the dark mode decouples and (c_b, c_2) obey a two-level problem with
// coupling sqrt(2) Omega and diagonal (0, Delta).

#include <cstddef>

#include "wgswitch/model.hpp"
#include "wgswitch/propagate.hpp"

namespace wgswitch {

struct BrightDarkState {
  Complex bright;
  Complex middle;
  Complex dark;
  double z = 0.0;

  [[nodiscard]] double norm() const;
};

/// Throws DimensionError unless s has three amplitudes.
BrightDarkState to_bright_dark(const AmplitudeState& s);
AmplitudeState from_bright_dark(const BrightDarkState& s);

/// Two-level model for (c_b, c_2): coupling scaled by sqrt(2), SecondOnly
/// diagonal, same mismatch and domain.
TwoGuideModel reduced_two_level(const ThreeGuideModel& m);

/// The same array traversed from the other end: z -> -z. With a symmetric
/// coupling only the mismatch changes, a StepFlip delta0 turning into -delta0.
ThreeGuideModel z_reversed(const ThreeGuideModel& m);

struct SplitterResult {
  Trajectory trajectory;
  double i1 = 0.0;
  double i2 = 0.0;
  double i3 = 0.0;
};

/// Launches light in the middle guide, c = (0, 1, 0) at z_min, and integrates
/// the full three-guide system.
SplitterResult run_splitter(const ThreeGuideModel& m, double tol = kDefaultTol,
                            std::size_t n_samples = kDefaultSamples);

}  // namespace wgswitch
