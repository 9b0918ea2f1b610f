#pragma once

// Dormand-Prince 8(5,3) for small complex systems, with Hairer's combined
// 5th/3rd-order error estimate and PI (Lund-stabilised) step control.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <sstream>
#include <utility>

#include "wgswitch/errors.hpp"

namespace wgswitch::detail {

namespace dop853 {
// Nodes
inline constexpr double c2 = 0.526001519587677318785587544488e-01;
inline constexpr double c3 = 0.789002279381515978178381316732e-01;
inline constexpr double c4 = 0.118350341907227396726757197510e+00;
inline constexpr double c5 = 0.281649658092772603273242802490e+00;
inline constexpr double c6 = 0.333333333333333333333333333333e+00;
inline constexpr double c7 = 0.25e+00;
inline constexpr double c8 = 0.307692307692307692307692307692e+00;
inline constexpr double c9 = 0.651282051282051282051282051282e+00;
inline constexpr double c10 = 0.6e+00;
inline constexpr double c11 = 0.857142857142857142857142857142e+00;

// Runge-Kutta matrix
inline constexpr double a21 = 5.26001519587677318785587544488e-2;
inline constexpr double a31 = 1.97250569845378994544595329183e-2;
inline constexpr double a32 = 5.91751709536136983633785987549e-2;
inline constexpr double a41 = 2.95875854768068491816892993775e-2;
inline constexpr double a43 = 8.87627564304205475450678981324e-2;
inline constexpr double a51 = 2.41365134159266685502369798665e-1;
inline constexpr double a53 = -8.84549479328286085344864962717e-1;
inline constexpr double a54 = 9.24834003261792003115737966543e-1;
inline constexpr double a61 = 3.7037037037037037037037037037e-2;
inline constexpr double a64 = 1.70828608729473871279604482173e-1;
inline constexpr double a65 = 1.25467687566822425016691814123e-1;
inline constexpr double a71 = 3.7109375e-2;
inline constexpr double a74 = 1.70252211019544039314978060272e-1;
inline constexpr double a75 = 6.02165389804559606850219397283e-2;
inline constexpr double a76 = -1.7578125e-2;
inline constexpr double a81 = 3.70920001185047927108779319836e-2;
inline constexpr double a84 = 1.70383925712239993810214054705e-1;
inline constexpr double a85 = 1.07262030446373284651809199168e-1;
inline constexpr double a86 = -1.53194377486244017527936158236e-2;
inline constexpr double a87 = 8.27378916381402288758473766002e-3;
inline constexpr double a91 = 6.24110958716075717114429577812e-1;
inline constexpr double a94 = -3.36089262944694129406857109825e0;
inline constexpr double a95 = -8.68219346841726006818189891453e-1;
inline constexpr double a96 = 2.75920996994467083049415600797e1;
inline constexpr double a97 = 2.01540675504778934086186788979e1;
inline constexpr double a98 = -4.34898841810699588477366255144e1;
inline constexpr double a101 = 4.77662536438264365890433908527e-1;
inline constexpr double a104 = -2.48811461997166764192642586468e0;
inline constexpr double a105 = -5.90290826836842996371446475743e-1;
inline constexpr double a106 = 2.12300514481811942347288949897e1;
inline constexpr double a107 = 1.52792336328824235832596922938e1;
inline constexpr double a108 = -3.32882109689848629194453265587e1;
inline constexpr double a109 = -2.03312017085086261358222928593e-2;
inline constexpr double a111 = -9.3714243008598732571704021658e-1;
inline constexpr double a114 = 5.18637242884406370830023853209e0;
inline constexpr double a115 = 1.09143734899672957818500254654e0;
inline constexpr double a116 = -8.14978701074692612513997267357e0;
inline constexpr double a117 = -1.85200656599969598641566180701e1;
inline constexpr double a118 = 2.27394870993505042818970056734e1;
inline constexpr double a119 = 2.49360555267965238987089396762e0;
inline constexpr double a1110 = -3.0467644718982195003823669022e0;
inline constexpr double a121 = 2.27331014751653820792359768449e0;
inline constexpr double a124 = -1.05344954667372501984066689879e1;
inline constexpr double a125 = -2.00087205822486249909675718444e0;
inline constexpr double a126 = -1.79589318631187989172765950534e1;
inline constexpr double a127 = 2.79488845294199600508499808837e1;
inline constexpr double a128 = -2.85899827713502369474065508674e0;
inline constexpr double a129 = -8.87285693353062954433549289258e0;
inline constexpr double a1210 = 1.23605671757943030647266201528e1;
inline constexpr double a1211 = 6.43392746015763530355970484046e-1;

// 8th-order weights
inline constexpr double b1 = 5.42937341165687622380535766363e-2;
inline constexpr double b6 = 4.45031289275240888144113950566e0;
inline constexpr double b7 = 1.89151789931450038304281599044e0;
inline constexpr double b8 = -5.8012039600105847814672114227e0;
inline constexpr double b9 = 3.1116436695781989440891606237e-1;
inline constexpr double b10 = -1.52160949662516078556178806805e-1;
inline constexpr double b11 = 2.01365400804030348374776537501e-1;
inline constexpr double b12 = 4.47106157277725905176885569043e-2;

// 3rd-order error weights
inline constexpr double bhh1 = 0.244094488188976377952755905512e+00;
inline constexpr double bhh2 = 0.733846688281611857341361741547e+00;
inline constexpr double bhh3 = 0.220588235294117647058823529412e-01;

// 5th-order error weights
inline constexpr double er1 = 0.1312004499419488073250102996e-01;
inline constexpr double er6 = -0.1225156446376204440720569753e+01;
inline constexpr double er7 = -0.4957589496572501915214079952e+00;
inline constexpr double er8 = 0.1664377182454986536961530415e+01;
inline constexpr double er9 = -0.3503288487499736816886487290e+00;
inline constexpr double er10 = 0.3341791187130174790297318841e+00;
inline constexpr double er11 = 0.8192320648511571246570742613e-01;
inline constexpr double er12 = -0.2235530786388629525884427845e-01;
}  // namespace dop853

struct IntegrationStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t evaluations = 0;
};

/// Stateful stepper: the proposed step size carries over between successive
/// calls to integrate() so that sampling a trajectory segment by segment
/// does not restart the controller.
template <std::size_t N>
class Dop853 {
 public:
  using State = std::array<std::complex<double>, N>;

  explicit Dop853(double tol, std::size_t max_steps = 50'000'000) : tol_(tol), max_steps_(max_steps) {}

  /// Advances y from z0 to z1 (z1 > z0). rhs(z, y, dy) writes dy/dz.
  template <class Rhs>
  void integrate(const Rhs& rhs, State& y, double z0, double z1);

  [[nodiscard]] const IntegrationStats& stats() const { return stats_; }

 private:
  template <class Rhs>
  double initial_step(const Rhs& rhs, const State& y, const State& f0, double z0, double span);

  double error_norm(const State& y0, const State& y1, const State& e5, const State& e3, double h) const;

  static constexpr double kSafe = 0.9;
  static constexpr double kFacMin = 0.333;  // smallest h_new / h
  static constexpr double kFacMax = 6.0;    // largest h_new / h
  static constexpr double kBeta = 0.04;     // PI (Lund) stabilisation
  static constexpr double kExpo = 1.0 / 8.0 - kBeta * 0.2;

  double tol_;
  std::size_t max_steps_;
  double h_ = 0.0;
  double err_old_ = 1e-4;
  IntegrationStats stats_;
};

template <std::size_t N>
double Dop853<N>::error_norm(const State& y0, const State& y1, const State& e5, const State& e3, double h) const {
  double err5 = 0.0;
  double err3 = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const double sk = tol_ + tol_ * std::max(std::abs(y0[i]), std::abs(y1[i]));
    err5 += std::norm(e5[i]) / (sk * sk);
    err3 += std::norm(e3[i]) / (sk * sk);
  }
  const double denom = err5 + 0.01 * err3;
  if (denom <= 0.0) return 0.0;
  return std::abs(h) * err5 * std::sqrt(1.0 / (static_cast<double>(N) * denom));
}

template <std::size_t N>
template <class Rhs>
double Dop853<N>::initial_step(const Rhs& rhs, const State& y, const State& f0, double z0, double span) {
  auto scaled_norm = [this, &y](const State& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sk = tol_ + tol_ * std::abs(y[i]);
      s += std::norm(v[i]) / (sk * sk);
    }
    return std::sqrt(s / static_cast<double>(N));
  };
  const double d0 = scaled_norm(y);
  const double d1 = scaled_norm(f0);
  double h = (d0 <= 1e-10 || d1 <= 1e-10) ? 1e-6 : 0.01 * d0 / d1;
  h = std::min(h, span);
  State y1;
  for (std::size_t i = 0; i < N; ++i) y1[i] = y[i] + h * f0[i];
  State f1;
  rhs(z0 + h, y1, f1);
  ++stats_.evaluations;
  State df;
  for (std::size_t i = 0; i < N; ++i) df[i] = f1[i] - f0[i];
  const double d2 = scaled_norm(df) / h;
  const double dmax = std::max(std::abs(d1), std::abs(d2));
  const double h1 = dmax <= 1e-15 ? std::max(1e-6, h * 1e-3) : std::pow(0.01 / dmax, 1.0 / 8.0);
  return std::min({100.0 * h, h1, span});
}

template <std::size_t N>
template <class Rhs>
void Dop853<N>::integrate(const Rhs& rhs, State& y, double z0, double z1) {
  using namespace dop853;
  if (!(z1 > z0)) return;

  State k1, k2, k3, k4, k5, k6, k7, k8, k9, k10, k11, k12, yt, y_new;
  rhs(z0, y, k1);
  ++stats_.evaluations;
  if (h_ <= 0.0) h_ = initial_step(rhs, y, k1, z0, z1 - z0);

  double z = z0;
  bool reject = false;
  std::size_t steps = 0;
  while (true) {
    if (++steps > max_steps_) {
      std::ostringstream os;
      os << "step controller exceeded " << max_steps_ << " steps at z = " << z;
      throw StepUnderflowError(os.str());
    }
    if (h_ < 10.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z))) {
      std::ostringstream os;
      os << "step size underflow (h = " << h_ << ") at z = " << z;
      throw StepUnderflowError(os.str());
    }
    bool last = false;
    double h = h_;
    if (z + 1.01 * h >= z1) {
      h = z1 - z;
      last = true;
    }

    auto stage = [&](State& out, double c, auto&&... terms) {
      for (std::size_t i = 0; i < N; ++i) {
        std::complex<double> acc = 0.0;
        ((acc += terms.first * terms.second[i]), ...);
        yt[i] = y[i] + h * acc;
      }
      rhs(z + c * h, yt, out);
    };
    using P = std::pair<double, const State&>;
    stage(k2, c2, P{a21, k1});
    stage(k3, c3, P{a31, k1}, P{a32, k2});
    stage(k4, c4, P{a41, k1}, P{a43, k3});
    stage(k5, c5, P{a51, k1}, P{a53, k3}, P{a54, k4});
    stage(k6, c6, P{a61, k1}, P{a64, k4}, P{a65, k5});
    stage(k7, c7, P{a71, k1}, P{a74, k4}, P{a75, k5}, P{a76, k6});
    stage(k8, c8, P{a81, k1}, P{a84, k4}, P{a85, k5}, P{a86, k6}, P{a87, k7});
    stage(k9, c9, P{a91, k1}, P{a94, k4}, P{a95, k5}, P{a96, k6}, P{a97, k7}, P{a98, k8});
    stage(k10, c10, P{a101, k1}, P{a104, k4}, P{a105, k5}, P{a106, k6}, P{a107, k7}, P{a108, k8}, P{a109, k9});
    stage(k11, c11, P{a111, k1}, P{a114, k4}, P{a115, k5}, P{a116, k6}, P{a117, k7}, P{a118, k8}, P{a119, k9},
          P{a1110, k10});
    stage(k12, 1.0, P{a121, k1}, P{a124, k4}, P{a125, k5}, P{a126, k6}, P{a127, k7}, P{a128, k8}, P{a129, k9},
          P{a1210, k10}, P{a1211, k11});
    stats_.evaluations += 11;

    State e5, e3;
    for (std::size_t i = 0; i < N; ++i) {
      const std::complex<double> slope =
          b1 * k1[i] + b6 * k6[i] + b7 * k7[i] + b8 * k8[i] + b9 * k9[i] + b10 * k10[i] + b11 * k11[i] + b12 * k12[i];
      y_new[i] = y[i] + h * slope;
      e3[i] = slope - bhh1 * k1[i] - bhh2 * k9[i] - bhh3 * k12[i];
      e5[i] = er1 * k1[i] + er6 * k6[i] + er7 * k7[i] + er8 * k8[i] + er9 * k9[i] + er10 * k10[i] + er11 * k11[i] +
              er12 * k12[i];
    }
    const double err = error_norm(y, y_new, e5, e3, h);

    double fac = std::pow(err, kExpo) / std::pow(err_old_, kBeta);
    fac = std::clamp(fac / kSafe, 1.0 / kFacMax, 1.0 / kFacMin);
    double h_next = h / fac;

    if (err <= 1.0) {
      err_old_ = std::max(err, 1e-4);
      ++stats_.accepted;
      y = y_new;
      z = last ? z1 : z + h;
      if (reject) h_next = std::min(h_next, h);
      reject = false;
      // A step shortened to land on z1 says little about the natural scale.
      h_ = last ? std::max(h_next, h_) : h_next;
      if (last) return;
      rhs(z, y, k1);
      ++stats_.evaluations;
    } else {
      ++stats_.rejected;
      reject = true;
      h_ = h / std::min(1.0 / kFacMin, std::pow(err, kExpo) / kSafe);
    }
  }
}

}  // namespace wgswitch::detail
