#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <optional>
#include <sstream>

#include "wgswitch/errors.hpp"
#include "wgswitch/numkernel.hpp"

namespace wgswitch::numkernel {
namespace {

namespace mp = boost::multiprecision;

// Log-magnitudes above this abandon double summation before anything overflows.
constexpr double kMaxDoubleLogTerm = 600.0;
// Maximum tolerated ratio of the largest term to the sum in double precision.
constexpr double kMaxDoubleCancellation = 1e4;
// Guard digits kept beyond the observed cancellation in extended precision.
constexpr double kGuardDigits = 22.0;

bool is_nonpositive_integer(Complex z) {
  if (z.imag() != 0.0 || z.real() > 0.0) return false;
  return z.real() == std::round(z.real());
}

bool is_integer(Complex z) { return z.imag() == 0.0 && z.real() == std::round(z.real()); }

struct SeriesResult {
  Complex value;
  double log10_max_term = 0.0;  // log10 of the largest |term|
};

struct TailBounds {
  double a, b, c, t;
};

// Upper bound on |ratio_j| for all j >= k, decreasing in k; infinity while
// k <= |c|.
double tail_ratio(const TailBounds& tb, int k) {
  const double kd = static_cast<double>(k);
  if (kd <= tb.c) return std::numeric_limits<double>::infinity();
  return tb.t * (tb.a + kd) * (tb.b + kd) / ((kd - tb.c) * (kd + 1.0));
}

// Direct summation of sum_k (a)_k (b)_k / ((c)_k k!) t^k in the complex type C.
// The magnitude of the running term is tracked as a base-10 exponent so the
// caller can judge cancellation without ever forming an overflowing term.
template <class C, class R>
std::optional<SeriesResult> sum_series(Complex a_in, Complex b_in, Complex c_in, double t_in, const R& eps) {
  const TailBounds bounds{std::max(std::abs(a_in), 1.0), std::max(std::abs(b_in), 1.0), std::abs(c_in), t_in};
  const C a(R(a_in.real()), R(a_in.imag()));
  const C b(R(b_in.real()), R(b_in.imag()));
  const C c(R(c_in.real()), R(c_in.imag()));
  const R t(t_in);

  C term(R(1), R(0));
  C sum = term;
  double log10_term = 0.0;
  double log10_max = 0.0;
  for (int k = 0; k < kSeriesTermCap; ++k) {
    const R kr(k);
    const C ratio = (a + kr) * (b + kr) / ((c + kr) * (kr + R(1))) * t;
    const R ratio_abs = abs(ratio);
    if (ratio_abs == R(0)) {
      return SeriesResult{Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag())), log10_max};
    }
    log10_term += static_cast<double>(log10(ratio_abs));
    if constexpr (std::is_same_v<R, double>) {
      if (log10_term > kMaxDoubleLogTerm) return std::nullopt;
    }
    log10_max = std::max(log10_max, log10_term);
    term *= ratio;
    sum += term;
    // Stop only once every later ratio is provably below one; the tail is
    // then dominated by a geometric series with ratio tail_ratio(k).
    const double rho = tail_ratio(bounds, k + 1);
    if (rho < 1.0) {
      const R term_abs = abs(term);
      const R sum_abs = abs(sum);
      if (term_abs * R(rho / (1.0 - rho)) <= eps * sum_abs ||
          log10_term < log10_max - 2.0 * static_cast<double>(-log10(eps))) {
        return SeriesResult{Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag())), log10_max};
      }
    }
  }
  std::ostringstream os;
  os << "hyp2f1 series did not converge within " << kSeriesTermCap << " terms";
  throw NonConvergenceError(os.str());
}

template <unsigned Digits>
using MpReal = mp::number<mp::cpp_bin_float<Digits>, mp::et_off>;
template <unsigned Digits>
using MpComplex = mp::number<mp::complex_adaptor<mp::cpp_bin_float<Digits>>, mp::et_off>;

template <unsigned Digits>
SeriesResult sum_extended(Complex a, Complex b, Complex c, double t) {
  const MpReal<Digits> eps = pow(MpReal<Digits>(10), -static_cast<int>(Digits) + 2);
  return *sum_series<MpComplex<Digits>, MpReal<Digits>>(a, b, c, t, eps);
}

double digits_lost(const SeriesResult& r) {
  const double magnitude = std::abs(r.value);
  if (magnitude == 0.0) return std::numeric_limits<double>::infinity();
  return r.log10_max_term - std::log10(magnitude);
}

Complex series_near_zero(Complex a, Complex b, Complex c, double t) {
  if (auto r = sum_series<Complex, double>(a, b, c, t, std::numeric_limits<double>::epsilon())) {
    if (digits_lost(*r) <= std::log10(kMaxDoubleCancellation)) return r->value;
  }
  // Escalate until the working precision covers the cancellation.
  SeriesResult r = sum_extended<40>(a, b, c, t);
  if (digits_lost(r) + kGuardDigits <= 40.0) return r.value;
  r = sum_extended<80>(a, b, c, t);
  if (digits_lost(r) + kGuardDigits <= 80.0) return r.value;
  r = sum_extended<160>(a, b, c, t);
  if (digits_lost(r) + kGuardDigits <= 160.0) return r.value;
  return sum_extended<320>(a, b, c, t).value;
}

// Gamma(p) Gamma(q) / (Gamma(r) Gamma(s)); zero when r or s is a pole.
Complex gamma_ratio(Complex p, Complex q, Complex r, Complex s) {
  if (is_nonpositive_integer(r) || is_nonpositive_integer(s)) return {0.0, 0.0};
  return std::exp(complex_log_gamma(p) + complex_log_gamma(q) - complex_log_gamma(r) - complex_log_gamma(s));
}

}  // namespace

Complex hyp2f1(Complex a, Complex b, Complex c, double t) {
  if (!(t >= 0.0 && t < 1.0)) {
    std::ostringstream os;
    os << "hyp2f1: argument t = " << t << " outside [0, 1)";
    throw ConfigError(os.str());
  }
  if (is_nonpositive_integer(c)) throw DegenerateParameterError("hyp2f1: c is a non-positive integer");
  if (t == 0.0) return {1.0, 0.0};
  if (t <= 0.5) return series_near_zero(a, b, c, t);

  const Complex s = c - a - b;
  if (is_integer(s)) throw DegenerateParameterError("hyp2f1: c - a - b is an integer; connection formula is singular");
  const double u = 1.0 - t;
  const Complex first = gamma_ratio(c, s, c - a, c - b) * series_near_zero(a, b, 1.0 - s, u);
  const Complex second =
      gamma_ratio(c, -s, a, b) * std::exp(s * std::log(u)) * series_near_zero(c - a, c - b, 1.0 + s, u);
  const Complex value = first + second;
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) throw OverflowError("hyp2f1: non-finite result");
  return value;
}

}  // namespace wgswitch::numkernel
