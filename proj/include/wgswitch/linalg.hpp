#pragma once

#include <algorithm>
#include <array>
#include <complex>

namespace wgswitch {

using Complex = std::complex<double>;

/// Dense 2x2 complex matrix, row-major.
struct Matrix2 {
  std::array<std::array<Complex, 2>, 2> m{};

  static Matrix2 identity() { return {{{{Complex(1.0), Complex(0.0)}, {Complex(0.0), Complex(1.0)}}}}; }
  static Matrix2 rotation(double theta);  // [[cos, sin], [-sin, cos]]
  static Matrix2 diagonal(Complex d0, Complex d1) { return {{{{d0, Complex(0.0)}, {Complex(0.0), d1}}}}; }

  Complex& operator()(int r, int c) { return m[r][c]; }
  const Complex& operator()(int r, int c) const { return m[r][c]; }

  [[nodiscard]] Matrix2 adjoint() const;
  [[nodiscard]] Matrix2 transpose() const;
  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);

  /// max_ij |(U^dagger U - I)_ij|
  [[nodiscard]] double unitarity_defect() const;
  /// max_ij |a_ij - b_ij|
  friend double max_abs_diff(const Matrix2& a, const Matrix2& b);
};

inline Matrix2 Matrix2::rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {{{{Complex(c), Complex(s)}, {Complex(-s), Complex(c)}}}};
}

inline Matrix2 Matrix2::adjoint() const {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = std::conj(m[j][i]);
  return r;
}

inline Matrix2 Matrix2::transpose() const {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[j][i];
  return r;
}

inline Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return r;
}

inline double max_abs_diff(const Matrix2& a, const Matrix2& b) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(a.m[i][j] - b.m[i][j]));
  return worst;
}

inline double Matrix2::unitarity_defect() const { return max_abs_diff(adjoint() * *this, identity()); }

/// Propagator across [z_a, z_b]; z_a = -inf / z_b = +inf are allowed for the
/// closed-form half- and full-line propagators.
struct Propagator2 {
  Matrix2 entries;
  double z_a = 0.0;
  double z_b = 0.0;

  Complex operator()(int r, int c) const { return entries(r, c); }
  [[nodiscard]] double unitarity_defect() const { return entries.unitarity_defect(); }
};

}  // namespace wgswitch
