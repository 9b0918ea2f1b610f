#include "wgswitch/numkernel.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wgswitch/errors.hpp"

namespace wgswitch::numkernel {
namespace {

constexpr double kPi = std::numbers::pi;

// Godfrey's g = 7, n = 9 Lanczos coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(Complex z) {
  if (z.imag() != 0.0 || z.real() > 0.0) return false;
  const double x = z.real();
  const double nearest = std::round(x);
  return std::abs(x - nearest) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
}

[[noreturn]] void throw_pole(Complex z) {
  std::ostringstream os;
  os << "gamma pole at z = (" << z.real() << ", " << z.imag() << ")";
  throw PoleError(os.str());
}

// sin(pi x) for real x; exact zeros at the integers.
double sinpi_real(double x) {
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double cospi_real(double x) {
  double r = std::fmod(std::abs(x), 2.0);
  if (r > 1.0) r = 2.0 - r;
  return sinpi_real(0.5 - r);
}

Complex log_gamma_right(Complex z) {
  z -= 1.0;
  Complex series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

// Logarithm of sin(pi z) continued along horizontal lines from Re z = 1/2,
// where sin(pi z) = cosh(pi Im z) > 0. For Im z >= 0,
//   sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}),  |e^{2 pi i z}| <= 1,
// and the last factor never leaves the right half-plane.
Complex log_sin_pi_continued(Complex z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi_continued(std::conj(z)));
  const double x = z.real();
  const double decay = std::exp(-2.0 * kPi * z.imag());
  const Complex rotor(decay * cospi_real(2.0 * x), decay * sinpi_real(2.0 * x));
  const Complex lead(std::log(0.5) + kPi * z.imag(), kPi * (0.5 - x));
  return lead + std::log(1.0 - rotor);
}

}  // namespace

Complex sin_pi(Complex z) {
  const double x = z.real();
  const double y = kPi * z.imag();
  return {sinpi_real(x) * std::cosh(y), cospi_real(x) * std::sinh(y)};
}

Complex complex_log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ConfigError("complex_log_gamma: non-finite argument");
  if (is_pole(z)) throw_pole(z);
  if (z.real() >= 0.5) return log_gamma_right(z);
  return std::log(kPi) - log_sin_pi_continued(z) - log_gamma_right(1.0 - z);
}

Complex complex_gamma(Complex z) {
  const Complex value = std::exp(complex_log_gamma(z));
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    std::ostringstream os;
    os << "gamma overflow at z = (" << z.real() << ", " << z.imag() << ")";
    throw OverflowError(os.str());
  }
  return value;
}

Complex reciprocal_gamma(Complex z) {
  if (is_pole(z)) return {0.0, 0.0};
  if (z.real() >= 0.5) return std::exp(-log_gamma_right(z));
  const Complex s = sin_pi(z);
  if (s == Complex(0.0, 0.0)) return s;
  return std::exp(std::log(s) + log_gamma_right(1.0 - z)) / kPi;
}

}  // namespace wgswitch::numkernel
