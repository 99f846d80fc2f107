#pragma once

#include "swefv/model.hpp"

namespace swefv {

// States fed to the numerical flux at one interface after the hydrostatic
// correction: depths clipped against the higher of the two reconstructed
// bottom values, discharges rebuilt from the desingularized velocities.
struct InterfaceStates {
  double h_left = 0.0, h_right = 0.0;  // corrected depths, >= 0
  double q_left = 0.0, q_right = 0.0;
  double v_left = 0.0, v_right = 0.0;
  double z_star = 0.0;                 // interface bottom height

  SweState left() const { return {h_left, q_left}; }
  SweState right() const { return {h_right, q_right}; }
};

// Inputs are the boundary-extrapolated total heights H, depths h and
// discharges q from the two cells meeting at the interface.
InterfaceStates hydrostatic_correct(double H_left, double H_right, double h_left, double h_right,
                                    double q_left, double q_right, const PhysConstants& pc);

// Everything the source quadratures need from one cell: its own boundary
// traces, the corrected depths at both ends, and (for orders >= 3) the
// reconstructed center values.
struct CellFaceData {
  double h_left = 0.0, h_right = 0.0;        // h traces at x_{j-1/2}+, x_{j+1/2}-
  double hhat_left = 0.0, hhat_right = 0.0;  // corrected depths at the two ends
  double z_left = 0.0, z_right = 0.0;        // bottom traces H - h at the two ends
  double h_center = 0.0, z_center = 0.0;     // center point values (orders 3-4)
};

// Momentum component of the source integral over the cell (the mass
// component is identically zero). Divide by the cell width to get the
// cell-average contribution to the semidiscrete scheme.
double source_order1(const CellFaceData& c, double g);
double source_order2(const CellFaceData& c, double g);
double source_high(const CellFaceData& c, double g);

}  // namespace swefv
