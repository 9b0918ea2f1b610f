#include "wgswitch/propagate.hpp"

#include <cmath>
#include <sstream>

#include "wgswitch/detail/dop853.hpp"
#include "wgswitch/errors.hpp"

namespace wgswitch {
namespace {

constexpr Complex kI(0.0, 1.0);

void check_tolerance(double tol) {
  if (!(tol >= 1e-14 && tol <= 1e-6)) {
    std::ostringstream os;
    os << "tolerance " << tol << " outside [1e-14, 1e-6]";
    throw ConfigError(os.str());
  }
}

template <std::size_t N>
std::array<Complex, N> check_initial(const AmplitudeState& initial, double z_min) {
  if (initial.amplitudes.size() != N) {
    std::ostringstream os;
    os << "initial state has " << initial.amplitudes.size() << " amplitudes, expected " << N;
    throw DimensionError(os.str());
  }
  if (initial.z != z_min) throw ConfigError("initial state must sit at z_min");
  if (std::abs(initial.norm() - 1.0) > 1e-10) throw ConfigError("initial state must have unit norm");
  std::array<Complex, N> y;
  for (std::size_t i = 0; i < N; ++i) y[i] = initial.amplitudes[i];
  return y;
}

/// Drives a stepper across [z_a, z_b], restarting the right-hand side at
/// z = 0 where the mismatch (piecewise constant) may jump.
template <std::size_t N, class MakeRhs>
class Evolver {
 public:
  using State = std::array<Complex, N>;

  Evolver(double tol, MakeRhs make_rhs) : stepper_(tol), make_rhs_(std::move(make_rhs)) {}

  void advance(State& y, double z_a, double z_b) {
    if (z_a < 0.0 && z_b > 0.0) {
      stepper_.integrate(make_rhs_(-1.0), y, z_a, 0.0);
      stepper_.integrate(make_rhs_(1.0), y, 0.0, z_b);
    } else {
      // side chosen by the interval midpoint; [z_a, z_b] lies on one side of 0
      stepper_.integrate(make_rhs_(0.5 * (z_a + z_b)), y, z_a, z_b);
    }
  }

  Trajectory sample(State y, double z_min, double z_max, std::size_t n_samples) {
    if (n_samples < 2) throw ConfigError("n_samples must be >= 2");
    Trajectory out;
    out.samples.reserve(n_samples);
    auto record = [&out](const State& s, double z) {
      out.samples.push_back(AmplitudeState{std::vector<Complex>(s.begin(), s.end()), z});
    };
    record(y, z_min);
    const double span = z_max - z_min;
    const double last_index = static_cast<double>(n_samples - 1);
    double z_prev = z_min;
    for (std::size_t i = 1; i < n_samples; ++i) {
      const double z = (i + 1 == n_samples) ? z_max : z_min + span * (static_cast<double>(i) / last_index);
      advance(y, z_prev, z);
      record(y, z);
      z_prev = z;
    }
    out.steps_accepted = stepper_.stats().accepted;
    out.steps_rejected = stepper_.stats().rejected;
    return out;
  }

 private:
  detail::Dop853<N> stepper_;
  MakeRhs make_rhs_;
};

template <std::size_t N, class MakeRhs>
Evolver<N, MakeRhs> make_evolver(double tol, MakeRhs make_rhs) {
  return Evolver<N, MakeRhs>(tol, std::move(make_rhs));
}

// Returns a factory: side (any z on the segment) -> rhs(z, y, dy).
auto two_level_rhs(const TwoGuideModel& m, Frame frame) {
  return [&m, frame](double side) {
    const std::array<double, 2> diag = m.diagonal(side);
    const CouplingProfile coupling = m.coupling;
    const MismatchProfile mismatch = m.mismatch;
    const double split = m.splitting_factor();
    return [=](double z, const std::array<Complex, 2>& y, std::array<Complex, 2>& dy) {
      const double omega = coupling.value(z);
      if (frame == Frame::Diagonal) {
        dy[0] = -kI * (diag[0] * y[0] + omega * y[1]);
        dy[1] = -kI * (omega * y[0] + diag[1] * y[1]);
      } else {
        // Phi' = h22 - h11 on this side; Phi(0) = 0
        const double phi = split * mismatch.accumulated(z);
        const Complex rot = std::polar(1.0, phi);
        dy[0] = -kI * omega * std::conj(rot) * y[1];
        dy[1] = -kI * omega * rot * y[0];
      }
    };
  };
}

auto three_level_rhs(const ThreeGuideModel& m) {
  return [&m](double side) {
    const double delta = m.mismatch.value(side);
    const CouplingProfile coupling = m.coupling;
    return [=](double z, const std::array<Complex, 3>& y, std::array<Complex, 3>& dy) {
      const double omega = coupling.value(z);
      dy[0] = -kI * omega * y[1];
      dy[1] = -kI * (omega * (y[0] + y[2]) + delta * y[1]);
      dy[2] = -kI * omega * y[1];
    };
  };
}

}  // namespace

double AmplitudeState::norm() const {
  double s = 0.0;
  for (const Complex& c : amplitudes) s += std::norm(c);
  return s;
}

double Trajectory::max_norm_drift() const {
  if (samples.empty()) return 0.0;
  const double n0 = samples.front().norm();
  double worst = 0.0;
  for (const AmplitudeState& s : samples) worst = std::max(worst, std::abs(s.norm() - n0));
  return worst;
}

Trajectory evolve_two(const TwoGuideModel& m, const AmplitudeState& initial, double tol, std::size_t n_samples,
                      Frame frame) {
  m.validate();
  check_tolerance(tol);
  auto y = check_initial<2>(initial, m.z_min);
  auto evolver = make_evolver<2>(tol, two_level_rhs(m, frame));
  return evolver.sample(y, m.z_min, m.z_max, n_samples);
}

Trajectory evolve_three(const ThreeGuideModel& m, const AmplitudeState& initial, double tol, std::size_t n_samples) {
  m.validate();
  check_tolerance(tol);
  auto y = check_initial<3>(initial, m.z_min);
  auto evolver = make_evolver<3>(tol, three_level_rhs(m));
  return evolver.sample(y, m.z_min, m.z_max, n_samples);
}

AmplitudeState evolve_two_final(const TwoGuideModel& m, const AmplitudeState& initial, double tol, Frame frame) {
  return evolve_two(m, initial, tol, 2, frame).final_state();
}

Propagator2 propagator_numeric(const TwoGuideModel& m, double z_a, double z_b, double tol) {
  m.validate();
  check_tolerance(tol);
  if (!(m.z_min <= z_a && z_a < z_b && z_b <= m.z_max)) {
    std::ostringstream os;
    os << "propagator interval [" << z_a << ", " << z_b << "] not inside [" << m.z_min << ", " << m.z_max << "]";
    throw ConfigError(os.str());
  }
  Propagator2 u;
  u.z_a = z_a;
  u.z_b = z_b;
  for (int col = 0; col < 2; ++col) {
    std::array<Complex, 2> y{};
    y[col] = 1.0;
    auto evolver = make_evolver<2>(tol, two_level_rhs(m, Frame::Diagonal));
    evolver.advance(y, z_a, z_b);
    u.entries(0, col) = y[0];
    u.entries(1, col) = y[1];
  }
  return u;
}

double final_transfer(const TwoGuideModel& m, double tol, Frame frame) {
  const AmplitudeState initial{{Complex(1.0), Complex(0.0)}, m.z_min};
  return evolve_two_final(m, initial, tol, frame).intensity(1);
}

}  // namespace wgswitch
