#include "swefv/reconstruct.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace swefv {

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

namespace {

// Slope through two neighbouring cell averages.
inline double interface_slope(double vl, double vr, double wl, double wr) {
  return (vr - vl) / (0.5 * (wl + wr));
}

}  // namespace

Parabola interp_parabola(std::span<const double> avgs, std::span<const double> widths) {
  assert(avgs.size() == 3 && widths.size() == 3);
  const double wm = widths[0], w0 = widths[1], wp = widths[2];
  const double sm = interface_slope(avgs[0], avgs[1], wm, w0);
  const double sp = interface_slope(avgs[1], avgs[2], w0, wp);
  const double total = wm + w0 + wp;
  Parabola p;
  p.c = 1.5 * (sp - sm) / total;
  p.b = ((w0 + 2.0 * wm) * sp + (w0 + 2.0 * wp) * sm) / (2.0 * total);
  p.a = avgs[1] - p.c * w0 * w0 / 12.0;
  return p;
}

CellTrace order2_trace(std::span<const double> avgs, std::span<const double> widths) {
  assert(avgs.size() == 3 && widths.size() == 3);
  const double sm = interface_slope(avgs[0], avgs[1], widths[0], widths[1]);
  const double sp = interface_slope(avgs[1], avgs[2], widths[1], widths[2]);
  const double s = minmod(sm, sp);
  const double half = 0.5 * widths[1];
  return {avgs[1] - s * half, avgs[1], avgs[1] + s * half};
}

CellTrace cweno3(std::span<const double> avgs, std::span<const double> widths,
                 const WenoParams& params) {
  assert(avgs.size() == 3 && widths.size() == 3);
  const double w0 = widths[1];
  const double sm = interface_slope(avgs[0], avgs[1], widths[0], w0);
  const double sp = interface_slope(avgs[1], avgs[2], w0, widths[2]);
  const Parabola opt = interp_parabola(avgs, widths);

  constexpr double alpha_c = 0.5, alpha_side = 0.25;

  // Central parabola defined by opt = alpha_c P_C + alpha_side (P_L + P_R);
  // both linears share the cell average, so only slope and curvature shift.
  Parabola pc;
  pc.a = (opt.a - 2.0 * alpha_side * avgs[1]) / alpha_c;
  pc.b = (opt.b - alpha_side * (sm + sp)) / alpha_c;
  pc.c = opt.c / alpha_c;

  const double w0sq = w0 * w0;
  const double is_m = w0sq * sm * sm;
  const double is_p = w0sq * sp * sp;
  const double dev = opt.b - alpha_side * sm - alpha_side * sp;
  const double dev_term =
      params.central == CentralIndicator::squared_deviation ? dev * dev * w0sq : dev * w0sq;
  const double is_c =
      (dev_term + (13.0 / 3.0) * opt.c * opt.c * w0sq * w0sq) / (alpha_c * alpha_c);

  const double eps = params.epsilon;
  const double tm = alpha_side / ((eps + is_m) * (eps + is_m));
  const double tc = alpha_c / ((eps + is_c) * (eps + is_c));
  const double tp = alpha_side / ((eps + is_p) * (eps + is_p));
  const double norm = tm + tc + tp;
  const double om = tm / norm, oc = tc / norm, op = tp / norm;

  const auto blend = [&](double xi) {
    const double lin_l = avgs[1] + sm * xi;
    const double lin_r = avgs[1] + sp * xi;
    return om * lin_l + oc * pc.value(xi) + op * lin_r;
  };
  const double half = 0.5 * w0;
  return {blend(-half), blend(0.0), blend(half)};
}

namespace {

// Partial sums of widths, paper-style: S(l,k) = sum_{i=l..k} delta_i with the
// window indexed -2..2.
struct WidthSums {
  double s_m2_2, s_m1_2, s_m2_1, s_m2_0, s_0_2;
  double w[5];
  explicit WidthSums(std::span<const double> widths) {
    for (int i = 0; i < 5; ++i) w[i] = widths[i];
    s_m2_2 = w[0] + w[1] + w[2] + w[3] + w[4];
    s_m1_2 = w[1] + w[2] + w[3] + w[4];
    s_m2_1 = w[0] + w[1] + w[2] + w[3];
    s_m2_0 = w[0] + w[1] + w[2];
    s_0_2 = w[2] + w[3] + w[4];
  }
};

}  // namespace

InterfaceWeights weno4_interface_weights(std::span<const double> widths) {
  assert(widths.size() == 5);
  const WidthSums s(widths);
  const double dm2 = s.w[0], dm1 = s.w[1], d0 = s.w[2], d1 = s.w[3], d2 = s.w[4];

  InterfaceWeights iw;
  // Value at the right interface x_{+1/2}.
  iw.right[0] = d1 * (d1 + d2) / (s.s_m2_2 * s.s_m2_1);
  iw.right[1] = s.s_m2_0 * (d1 + d2) * (s.s_m2_1 + s.s_m1_2) / (s.s_m2_2 * s.s_m1_2 * s.s_m2_1);
  iw.right[2] = s.s_m2_0 * (dm1 + d0) / (s.s_m2_2 * s.s_m1_2);
  // Value at the left interface x_{-1/2}.
  iw.left[0] = s.s_0_2 * (d0 + d1) / (s.s_m2_2 * s.s_m2_1);
  iw.left[1] = s.s_0_2 * (dm2 + dm1) * (s.s_m2_1 + s.s_m1_2) / (s.s_m2_2 * s.s_m1_2 * s.s_m2_1);
  iw.left[2] = dm1 * (dm2 + dm1) / (s.s_m2_2 * s.s_m1_2);
  return iw;
}

std::array<double, 3> weno4_center_weights(std::span<const double> widths) {
  assert(widths.size() == 5);
  const WidthSums s(widths);
  const double dm2 = s.w[0], dm1 = s.w[1], d0 = s.w[2], d1 = s.w[3], d2 = s.w[4];

  double dl, dr;  // weights of the leftmost and rightmost sub-parabolas
  if (d1 > dm1) {
    dr = 0.5 * (dm2 + 2.0 * dm1 + d0) / (s.s_m2_1 + s.s_m1_2);
    dl = (d1 - dm1 + dr * s.s_m1_2) / s.s_m2_1;
  } else {
    dl = 0.5 * (d2 + 2.0 * d1 + d0) / (s.s_m2_1 + s.s_m1_2);
    dr = (dm1 - d1 + dl * s.s_m2_1) / s.s_m1_2;
  }
  return {dl, 1.0 - dl - dr, dr};
}

CellTrace weno4(std::span<const double> avgs, std::span<const double> widths,
                const WenoParams& params) {
  assert(avgs.size() == 5 && widths.size() == 5);
  const double w0 = widths[2];
  const double half = 0.5 * w0;

  // Sub-parabolas on {-2..0}, {-1..1}, {0..2}, each recentered on cell 0.
  Parabola p[3];
  double shift[3];  // cell-0 center minus sub-stencil center
  for (int l = 0; l < 3; ++l) {
    p[l] = interp_parabola(avgs.subspan(l, 3), widths.subspan(l, 3));
  }
  shift[0] = 0.5 * (widths[1] + w0);    // stencil centered on cell -1
  shift[1] = 0.0;
  shift[2] = -0.5 * (widths[3] + w0);   // stencil centered on cell +1

  // Jiang-Shu indicator over the central cell:
  // delta0^2 P'(x0)^2 + 13/3 c^2 delta0^4.
  double is[3];
  for (int l = 0; l < 3; ++l) {
    const double slope0 = p[l].slope(shift[l]);
    is[l] = w0 * w0 * slope0 * slope0 + (13.0 / 3.0) * p[l].c * p[l].c * w0 * w0 * w0 * w0;
  }

  const InterfaceWeights lin = weno4_interface_weights(widths);
  const std::array<double, 3> lin_c = weno4_center_weights(widths);

  const auto blend = [&](const std::array<double, 3>& d, double xi) {
    double t[3], sum = 0.0;
    for (int l = 0; l < 3; ++l) {
      const double e = params.epsilon + is[l];
      t[l] = d[l] / (e * e);
      sum += t[l];
    }
    double val = 0.0;
    for (int l = 0; l < 3; ++l) val += (t[l] / sum) * p[l].value(xi + shift[l]);
    return val;
  };

  return {blend(lin.left, -half), blend(lin_c, 0.0), blend(lin.right, half)};
}

Trace reconstruct_field(int order, std::span<const double> padded_values,
                        std::span<const double> padded_widths, const WenoParams& params) {
  if (order < 1 || order > 4) throw std::invalid_argument("reconstruct_field: order must be 1..4");
  if (padded_values.size() != padded_widths.size() || padded_values.size() < 5)
    throw std::invalid_argument("reconstruct_field: padded arrays need 2 ghosts per side");
  const std::size_t n = padded_values.size() - 4;

  Trace tr;
  tr.left.resize(n);
  tr.center.resize(n);
  tr.right.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t c = j + 2;  // index into padded arrays
    CellTrace ct;
    switch (order) {
      case 1:
        ct = {padded_values[c], padded_values[c], padded_values[c]};
        break;
      case 2:
        ct = order2_trace(padded_values.subspan(c - 1, 3), padded_widths.subspan(c - 1, 3));
        break;
      case 3:
        ct = cweno3(padded_values.subspan(c - 1, 3), padded_widths.subspan(c - 1, 3), params);
        break;
      default:
        ct = weno4(padded_values.subspan(c - 2, 5), padded_widths.subspan(c - 2, 5), params);
        break;
    }
    tr.left[j] = ct.left;
    tr.center[j] = ct.center;
    tr.right[j] = ct.right;
  }
  return tr;
}

}  // namespace swefv
