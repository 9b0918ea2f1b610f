#include "wgswitch/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "wgswitch/errors.hpp"
#include "wgswitch/numkernel.hpp"

namespace wgswitch {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI(0.0, 1.0);

double two_re_ab_conj_squared(const HalfPropagatorEntries& e) {
  const double r = 2.0 * std::real(e.a * std::conj(e.b));
  return r * r;
}

Propagator2 make(const Complex& u00, const Complex& u01, const Complex& u10, const Complex& u11, double z_a,
                 double z_b) {
  Propagator2 u;
  u.entries = Matrix2{{{{u00, u01}, {u10, u11}}}};
  u.z_a = z_a;
  u.z_b = z_b;
  return u;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

StepSechParams StepSechParams::make(double alpha, double delta_l) {
  if (!std::isfinite(alpha) || alpha < 0.0) throw ConfigError("alpha = Omega0 L must be finite and >= 0");
  if (!std::isfinite(delta_l) || delta_l < 0.0) throw ConfigError("delta_l = Delta0 L must be finite and >= 0");
  return StepSechParams{alpha, delta_l};
}

HalfPropagatorEntries half_propagator_entries_direct(const StepSechParams& p) {
  using numkernel::hyp2f1;
  const Complex g = p.gamma();
  HalfPropagatorEntries e;
  e.a = hyp2f1(p.alpha, -p.alpha, g, 0.5);
  e.b = -kI * p.alpha / (2.0 * g) * hyp2f1(1.0 + p.alpha, 1.0 - p.alpha, 1.0 + g, 0.5);
  return e;
}

HalfPropagatorEntries half_propagator_entries(const StepSechParams& p) {
  using numkernel::complex_log_gamma;
  using numkernel::reciprocal_gamma;
  const Complex g = p.gamma();
  const Complex shift(0.0, 0.25 * p.delta_l);
  const double h = 0.5 * p.alpha;

  HalfPropagatorEntries e;
  e.xi = reciprocal_gamma(0.25 + h + shift) * reciprocal_gamma(0.75 - h + shift);
  e.eta = reciprocal_gamma(0.75 + h + shift) * reciprocal_gamma(0.25 - h + shift);
  // sqrt(pi) 2^-gamma Gamma(gamma)
  const Complex prefactor = std::exp(0.5 * std::log(kPi) - g * std::log(2.0) + complex_log_gamma(g));
  e.a = prefactor * (e.xi + e.eta);
  e.b = -kI * prefactor * (e.xi - e.eta);

  const HalfPropagatorEntries direct = half_propagator_entries_direct(p);
  const double mismatch = std::max(std::abs(e.a - direct.a), std::abs(e.b - direct.b));
  if (!(mismatch <= kCrossValidationTol)) {
    std::ostringstream os;
    os << "half-propagator cross-validation failed at alpha = " << p.alpha << ", delta_l = " << p.delta_l
       << ": |Gamma-form - 2F1| = " << mismatch;
    throw NumericalError(os.str());
  }
  return e;
}

Propagator2 half_propagator(const StepSechParams& p) {
  const HalfPropagatorEntries e = half_propagator_entries(p);
  return make(e.a, -std::conj(e.b), e.b, std::conj(e.a), -kInf, 0.0);
}

Propagator2 second_half_propagator(const StepSechParams& p) {
  const HalfPropagatorEntries e = half_propagator_entries(p);
  return make(e.a, -e.b, std::conj(e.b), std::conj(e.a), 0.0, kInf);
}

Propagator2 full_propagator(const StepSechParams& p) {
  const HalfPropagatorEntries e = half_propagator_entries(p);
  const Complex diag = e.a * e.a - e.b * e.b;
  const double off = 2.0 * std::real(e.a * std::conj(e.b));
  return make(diag, -off, off, std::conj(diag), -kInf, kInf);
}

double phase_phi(double alpha, double delta_l) {
  using numkernel::complex_log_gamma;
  const Complex z1(0.25 - 0.5 * alpha, -0.25 * delta_l);
  const Complex z2(0.25 + 0.5 * alpha, 0.25 * delta_l);
  // arg of the product from the imaginary parts of the logs, so large alpha
  // never forms an overflowing Gamma value
  const double arg = std::remainder(std::imag(complex_log_gamma(z1) + complex_log_gamma(z2)), 2.0 * kPi);
  // remainder lands in [-pi, pi]; fold -pi onto +pi
  return 2.0 * (arg == -kPi ? kPi : arg);
}

double phase_phi(const StepSechParams& p) { return phase_phi(p.alpha, p.delta_l); }

double intensity_closed_form(const StepSechParams& p) {
  const HalfPropagatorEntries e = half_propagator_entries(p);
  const double reference = two_re_ab_conj_squared(e);

  double value = reference;
  try {
    const double phi = phase_phi(p);
    const double half_area = 0.5 * kPi * p.delta_l;
    const Complex c = std::cos(Complex(kPi * p.alpha, half_area));
    const double amp = std::imag(std::polar(1.0, phi) * c) / std::cosh(half_area);
    value = amp * amp;
  } catch (const PoleError&) {
    // removable pole pair at delta_l = 0; the |2 Re(a b*)|^2 route is exact there
  }

  if (std::abs(value - reference) > 1e-9) {
    std::ostringstream os;
    os << "closed-form intensity disagrees with |2 Re(a b*)|^2 at alpha = " << p.alpha << ", delta_l = " << p.delta_l
       << " (" << value << " vs " << reference << ")";
    throw NumericalError(os.str());
  }
  if (!(value >= 0.0 && value <= 1.0 + 1e-9)) {
    std::ostringstream os;
    os << "closed-form intensity " << value << " outside [0, 1]";
    throw NumericalError(os.str());
  }
  return value;
}

AsymptoticEstimate intensity_asymptotic(const StepSechParams& p) {
  AsymptoticEstimate out;
  if (p.alpha == 0.0) return out;  // no coupling, no transfer
  const double a2 = p.alpha * p.alpha;
  const double d = p.delta_l;
  const double bracket = 1.0 - 2.0 * d / p.alpha * std::exp(-0.5 * kPi * d) * std::cos(0.5 * kPi * p.alpha);
  out.value = a2 / (a2 + d * d) * bracket * bracket;
  out.in_regime = d == 0.0 || p.alpha / d >= kAsymptoticRegimeRatio;
  return out;
}

}  // namespace wgswitch
