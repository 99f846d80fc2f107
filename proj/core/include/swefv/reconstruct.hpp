#pragma once

#include <array>
#include <span>
#include <vector>

namespace swefv {

// Variant of the smoothness indicator of the central parabola in the
// third-order compact blend: the deviation of its slope from the weighted
// one-sided slopes enters either squared (dimensionally consistent, default)
// or plain.
enum class CentralIndicator { squared_deviation, plain_deviation };

struct WenoParams {
  double epsilon = 1e-6;
  CentralIndicator central = CentralIndicator::squared_deviation;
};

// 0 on sign change, otherwise the argument of smaller magnitude.
double minmod(double a, double b);

// Quadratic a + b xi + c xi^2 with xi measured from a reference point.
struct Parabola {
  double a = 0.0, b = 0.0, c = 0.0;
  double value(double xi) const { return a + xi * (b + xi * c); }
  double slope(double xi) const { return b + 2.0 * c * xi; }
  // Average over [xl, xr] in local coordinates.
  double average(double xl, double xr) const {
    return a + 0.5 * b * (xl + xr) + c * (xr * xr + xr * xl + xl * xl) / 3.0;
  }
};

// The unique parabola matching three consecutive cell averages in the mean
// sense; coefficients are about the central cell's center.
Parabola interp_parabola(std::span<const double> avgs, std::span<const double> widths);

// Boundary-extrapolated and center point values reconstructed within a cell.
struct CellTrace {
  double left = 0.0, center = 0.0, right = 0.0;
};

// Piecewise-linear trace with MinMod-limited slope (3-cell window).
CellTrace order2_trace(std::span<const double> avgs, std::span<const double> widths);

// Compact third-order blend of two one-sided linears and a central parabola
// (3-cell window). Uniformly third-order on smooth data, conservative.
CellTrace cweno3(std::span<const double> avgs, std::span<const double> widths,
                 const WenoParams& params);

// Linear weights combining the three sub-parabolas of a 5-cell window so that
// the blend matches the quartic mean-interpolant at the cell interfaces.
// Weights are ordered by sub-stencil, leftmost {-2,-1,0} first.
struct InterfaceWeights {
  std::array<double, 3> left;   // for the value at x_{j-1/2}
  std::array<double, 3> right;  // for the value at x_{j+1/2}
};
InterfaceWeights weno4_interface_weights(std::span<const double> widths);

// Positive weights reproducing cubics at the cell center, chosen to maximize
// the smallest coefficient. Same ordering as above.
std::array<double, 3> weno4_center_weights(std::span<const double> widths);

// Fourth-order reconstruction from a 5-cell window: fifth-order accurate
// interface values, fourth-order center value, nonlinear weighting per
// evaluation point.
CellTrace weno4(std::span<const double> avgs, std::span<const double> widths,
                const WenoParams& params);

// Per-cell traces for a whole field. Input arrays carry two ghost cells per
// side; the result covers the interior cells.
struct Trace {
  std::vector<double> left, center, right;
  std::size_t size() const { return left.size(); }
};
Trace reconstruct_field(int order, std::span<const double> padded_values,
                        std::span<const double> padded_widths, const WenoParams& params);

}  // namespace swefv
