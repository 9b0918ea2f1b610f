#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wgswitch/detail/dop853.hpp"
#include "wgswitch/errors.hpp"
#include "wgswitch/propagate.hpp"

using namespace wgswitch;
using std::numbers::pi;

namespace {

TwoGuideModel two(double omega0, double delta0, DiagonalConvention conv = DiagonalConvention::FullDelta,
                  ProfileKind kind = ProfileKind::Sech) {
  TwoGuideModel m;
  m.coupling = CouplingProfile{kind, omega0, 1.0};
  m.mismatch = MismatchProfile{MismatchKind::StepFlip, delta0};
  m.convention = conv;
  return m;
}

ThreeGuideModel three(double omega0, double delta0) {
  ThreeGuideModel m;
  m.coupling = CouplingProfile{ProfileKind::Sech, omega0, 1.0};
  m.mismatch = MismatchProfile{MismatchKind::StepFlip, delta0};
  return m;
}

AmplitudeState start(const TwoGuideModel& m) { return {{Complex(1.0), Complex(0.0)}, m.z_min}; }

double sin2(double x) { return std::sin(x) * std::sin(x); }

}  // namespace

TEST_CASE("resonant transfer follows the pulse area") {
  const TwoGuideModel m = two(0.25, 0.0);
  CHECK(std::abs(final_transfer(m) - 0.5) < 1e-4);
  auto g = oracle::rng(31);
  for (int n = 0; n < 10; ++n) {
    const double w = oracle::uniform(g, 0.0, 3.0);
    const TwoGuideModel r = two(w, 0.0);
    // exact for the truncated domain: sin^2 of the pulse area over [-12, 12]
    CHECK(std::abs(final_transfer(r) - sin2(pulse_area(r, r.z_min, r.z_max))) < 1e-9);
  }
}

TEST_CASE("no coupling, no transfer") {
  const TwoGuideModel m = two(0.0, 1.3);
  const Trajectory t = evolve_two(m, start(m), kDefaultTol, 51);
  for (const AmplitudeState& s : t.samples) {
    CHECK(s.intensity(1) == 0.0);
    CHECK(std::abs(s.intensity(0) - 1.0) < 1e-10);
  }
}

TEST_CASE("adiabatic switching at Omega0 L = 50, Delta0 L = 2") {
  CHECK(std::abs(final_transfer(two(50.0, 2.0)) - 0.998) < 0.005);
}

TEST_CASE("trajectory sampling") {
  const TwoGuideModel m = two(3.0, 1.0);
  const Trajectory t = evolve_two(m, start(m), kDefaultTol, 17);
  REQUIRE(t.samples.size() == 17);
  CHECK(t.guides() == 2);
  CHECK(t.samples.front().z == m.z_min);
  CHECK(t.samples.back().z == m.z_max);
  for (std::size_t i = 1; i < t.samples.size(); ++i) CHECK(t.samples[i].z > t.samples[i - 1].z);
  CHECK(t.steps_accepted > 0);
}

TEST_CASE("sampling density does not change the final state") {
  const TwoGuideModel m = two(20.0, 1.5);
  const Complex a = evolve_two(m, start(m), kDefaultTol, 2).final_state().amplitudes[1];
  const Complex b = evolve_two(m, start(m), kDefaultTol, 2001).final_state().amplitudes[1];
  CHECK(std::abs(a - b) < 1e-9);
}

TEST_CASE("norm conservation over random models") {
  auto g = oracle::rng(32);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const auto conv = n % 2 ? DiagonalConvention::FullDelta : DiagonalConvention::HalfDelta;
    const auto kind = n % 3 ? ProfileKind::Sech : ProfileKind::Gaussian;
    const TwoGuideModel m = two(oracle::uniform(g, 0.0, 60.0), oracle::uniform(g, 0.0, 5.0), conv, kind);
    worst = std::max(worst, evolve_two(m, start(m), 1e-12, 201).max_norm_drift());
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("numeric propagator") {
  SUBCASE("identity without coupling or mismatch") {
    const Propagator2 u = propagator_numeric(two(0.0, 0.0), -12.0, 12.0);
    CHECK(max_abs_diff(u.entries, Matrix2::identity()) < 1e-14);
  }
  SUBCASE("pure phases without coupling") {
    const Propagator2 u = propagator_numeric(two(0.0, 1.7), -12.0, 5.0);
    CHECK(u(0, 1) == Complex(0.0));
    CHECK(u(1, 0) == Complex(0.0));
    CHECK(std::abs(std::abs(u(0, 0)) - 1.0) < 1e-10);
    CHECK(std::abs(std::abs(u(1, 1)) - 1.0) < 1e-10);
    // u00 = exp(-i * integral of h11), h11 = -Delta
    const double phase = 1.7 * 12.0 - 1.7 * 5.0;
    CHECK(std::abs(u(0, 0) - std::polar(1.0, phase)) < 1e-10);
    CHECK(std::abs(u(1, 1) - std::polar(1.0, -phase)) < 1e-10);
  }
  SUBCASE("unitarity and symmetric off-diagonals") {
    auto g = oracle::rng(33);
    for (int n = 0; n < 40; ++n) {
      const TwoGuideModel m = two(oracle::uniform(g, 0.0, 5.0), oracle::uniform(g, 0.0, 5.0));
      const double za = oracle::uniform(g, -12.0, 0.0);
      const double zb = oracle::uniform(g, za + 0.1, 12.0);
      const Propagator2 u = propagator_numeric(m, za, zb, 1e-12);
      CHECK(u.unitarity_defect() <= 1e-11);
      CHECK(std::abs(std::norm(u(0, 1)) - std::norm(u(1, 0))) <= 1e-9);
    }
  }
  SUBCASE("interval checks") {
    CHECK_THROWS_AS(propagator_numeric(two(1.0, 1.0), -13.0, 0.0), ConfigError);
    CHECK_THROWS_AS(propagator_numeric(two(1.0, 1.0), 1.0, 1.0), ConfigError);
  }
}

TEST_CASE("ODE agrees with a fixed-step exponential-midpoint oracle") {
  const double cases[][2] = {{0.7, 0.4}, {2.0, 1.0}, {5.0, 3.0}, {20.0, 2.0}};
  for (auto conv : {DiagonalConvention::FullDelta, DiagonalConvention::HalfDelta}) {
    for (const auto& c : cases) {
      const TwoGuideModel m = two(c[0], c[1], conv);
      auto h = [&m](double z) {
        const auto d = m.diagonal(z);
        return std::array<double, 3>{d[0], m.coupling.value(z), d[1]};
      };
      const double want = oracle::transfer_richardson(h, m.z_min, m.z_max, 40000);
      CAPTURE(c[0]);
      CAPTURE(c[1]);
      CHECK(std::abs(final_transfer(m) - want) < 1e-8);
    }
  }
}

TEST_CASE("tightening the tolerance never increases the error") {
  const double cases[][2] = {{1.0, 1.0}, {20.0, 2.0}, {50.0, 2.0}, {7.5, 0.3}};
  for (const auto& c : cases) {
    const TwoGuideModel m = two(c[0], c[1]);
    const double ref = final_transfer(m, 1e-14);
    double previous = INFINITY;
    for (double tol = 1e-6; tol >= 1e-10; tol /= 2.0) {
      const double err = std::abs(final_transfer(m, tol) - ref);
      CAPTURE(c[0]);
      CAPTURE(tol);
      CHECK(err <= previous);
      previous = err;
    }
  }
}

TEST_CASE("label-swap symmetry") {
  auto g = oracle::rng(34);
  for (int n = 0; n < 20; ++n) {
    for (auto conv : {DiagonalConvention::FullDelta, DiagonalConvention::HalfDelta}) {
      const double w = oracle::uniform(g, 0.0, 30.0);
      const double d = oracle::uniform(g, 0.0, 5.0);
      const TwoGuideModel m = two(w, d, conv);
      const TwoGuideModel swapped = two(w, -d, conv);
      const AmplitudeState from_two{{Complex(0.0), Complex(1.0)}, swapped.z_min};
      const double i1 = evolve_two_final(swapped, from_two).intensity(0);
      CHECK(std::abs(i1 - final_transfer(m)) <= 1e-8);
    }
  }
}

TEST_CASE("diagonal and interaction frames give the same intensities") {
  auto g = oracle::rng(35);
  for (int n = 0; n < 20; ++n) {
    for (auto conv : {DiagonalConvention::FullDelta, DiagonalConvention::HalfDelta}) {
      const TwoGuideModel m = two(oracle::uniform(g, 0.0, 30.0), oracle::uniform(g, 0.0, 5.0), conv);
      const Trajectory a = evolve_two(m, start(m), kDefaultTol, 101, Frame::Diagonal);
      const Trajectory b = evolve_two(m, start(m), kDefaultTol, 101, Frame::Interaction);
      for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(std::abs(a.samples[i].intensity(1) - b.samples[i].intensity(1)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("three guides: dark state does not evolve") {
  const ThreeGuideModel m = three(50.0, 2.0);
  const double r = 1.0 / std::sqrt(2.0);
  const Trajectory t = evolve_three(m, {{Complex(r), Complex(0.0), Complex(-r)}, m.z_min}, kDefaultTol, 201);
  for (const AmplitudeState& s : t.samples) {
    CHECK(std::abs(s.intensity(0) - 0.5) < 1e-9);
    CHECK(s.intensity(1) < 1e-9);
    CHECK(std::abs(s.intensity(2) - 0.5) < 1e-9);
  }
}

TEST_CASE("three guides without coupling") {
  const ThreeGuideModel m = three(0.0, 2.0);
  const AmplitudeState f = evolve_three(m, {{Complex(0.0), Complex(1.0), Complex(0.0)}, m.z_min}).final_state();
  CHECK(f.intensity(0) == 0.0);
  CHECK(std::abs(f.intensity(1) - 1.0) < 1e-10);
  CHECK(f.intensity(2) == 0.0);
}

TEST_CASE("three guides split the middle guide evenly") {
  const ThreeGuideModel m = three(50.0, 2.0);
  const AmplitudeState f = evolve_three(m, {{Complex(0.0), Complex(1.0), Complex(0.0)}, m.z_min}).final_state();
  CHECK(std::abs(f.intensity(0) - 0.5) < 0.01);
  CHECK(std::abs(f.intensity(2) - 0.5) < 0.01);
  CHECK(std::abs(f.intensity(0) - f.intensity(2)) < 1e-10);
}

TEST_CASE("input validation") {
  const TwoGuideModel m = two(1.0, 1.0);
  CHECK_THROWS_AS(evolve_two(m, start(m), 1e-15), ConfigError);
  CHECK_THROWS_AS(evolve_two(m, start(m), 1e-5), ConfigError);
  CHECK_THROWS_AS(evolve_two(m, start(m), kDefaultTol, 1), ConfigError);
  CHECK_THROWS_AS(evolve_two(m, {{Complex(1.0), Complex(0.0)}, -11.0}), ConfigError);
  CHECK_THROWS_AS(evolve_two(m, {{Complex(1.0), Complex(1.0)}, m.z_min}), ConfigError);
  CHECK_THROWS_AS(evolve_two(m, {{Complex(1.0), Complex(0.0), Complex(0.0)}, m.z_min}), DimensionError);
  const ThreeGuideModel t = three(1.0, 1.0);
  CHECK_THROWS_AS(evolve_three(t, {{Complex(1.0), Complex(0.0)}, t.z_min}), DimensionError);
  TwoGuideModel bad = m;
  bad.z_min = 1.0;
  CHECK_THROWS_AS(evolve_two(bad, start(bad)), ConfigError);
}

TEST_CASE("step controller reports a stall") {
  detail::Dop853<2> stepper(1e-12, 10);
  std::array<Complex, 2> y{Complex(1.0), Complex(0.0)};
  auto rhs = [](double, const std::array<Complex, 2>& c, std::array<Complex, 2>& dc) {
    dc[0] = Complex(0.0, -100.0) * c[1];
    dc[1] = Complex(0.0, -100.0) * c[0];
  };
  CHECK_THROWS_AS(stepper.integrate(rhs, y, 0.0, 10.0), StepUnderflowError);
}
