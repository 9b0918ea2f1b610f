#include "wgswitch/splitter.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wgswitch/errors.hpp"

namespace wgswitch {

namespace {
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}

double BrightDarkState::norm() const { return std::norm(bright) + std::norm(middle) + std::norm(dark); }

BrightDarkState to_bright_dark(const AmplitudeState& s) {
  if (s.amplitudes.size() != 3) {
    std::ostringstream os;
    os << "bright/dark transform needs 3 amplitudes, got " << s.amplitudes.size();
    throw DimensionError(os.str());
  }
  const Complex c1 = s.amplitudes[0];
  const Complex c3 = s.amplitudes[2];
  return BrightDarkState{(c1 + c3) * kInvSqrt2, s.amplitudes[1], (c1 - c3) * kInvSqrt2, s.z};
}

AmplitudeState from_bright_dark(const BrightDarkState& s) {
  return AmplitudeState{{(s.bright + s.dark) * kInvSqrt2, s.middle, (s.bright - s.dark) * kInvSqrt2}, s.z};
}

TwoGuideModel reduced_two_level(const ThreeGuideModel& m) {
  m.validate();
  TwoGuideModel r;
  r.coupling = m.coupling;
  r.coupling.omega0 *= std::numbers::sqrt2;
  r.mismatch = m.mismatch;
  r.z_min = m.z_min;
  r.z_max = m.z_max;
  r.convention = DiagonalConvention::SecondOnly;
  return r;
}

ThreeGuideModel z_reversed(const ThreeGuideModel& m) {
  m.validate();
  ThreeGuideModel r = m;
  r.z_min = -m.z_max;
  r.z_max = -m.z_min;
  if (m.mismatch.kind == MismatchKind::StepFlip) r.mismatch.delta0 = -m.mismatch.delta0;
  return r;
}

SplitterResult run_splitter(const ThreeGuideModel& m, double tol, std::size_t n_samples) {
  const AmplitudeState initial{{Complex(0.0), Complex(1.0), Complex(0.0)}, m.z_min};
  SplitterResult out;
  out.trajectory = evolve_three(m, initial, tol, n_samples);
  const AmplitudeState& f = out.trajectory.final_state();
  out.i1 = f.intensity(0);
  out.i2 = f.intensity(1);
  out.i3 = f.intensity(2);
  return out;
}

}  // namespace wgswitch
