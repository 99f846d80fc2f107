#include "swefv/hydrostatic.hpp"

#include <algorithm>
#include <cmath>

namespace swefv {

InterfaceStates hydrostatic_correct(double H_left, double H_right, double h_left, double h_right,
                                    double q_left, double q_right, const PhysConstants& pc) {
  const double z_left = H_left - h_left;
  const double z_right = H_right - h_right;

  InterfaceStates s;
  s.z_star = std::max(z_left, z_right);
  s.h_left = std::max(H_left - s.z_star, 0.0);
  s.h_right = std::max(H_right - s.z_star, 0.0);
  // Velocities from the uncorrected traces; reconstruction can undershoot in
  // nearly dry cells, so clip the depth fed to the desingularization.
  s.v_left = desingularized_velocity(std::max(h_left, 0.0), q_left, pc.eps_h);
  s.v_right = desingularized_velocity(std::max(h_right, 0.0), q_right, pc.eps_h);
  s.q_left = s.h_left * s.v_left;
  s.q_right = s.h_right * s.v_right;
  return s;
}

double source_order1(const CellFaceData& c, double g) {
  return 0.5 * g * (c.hhat_right * c.hhat_right - c.hhat_left * c.hhat_left);
}

double source_order2(const CellFaceData& c, double g) {
  return 0.5 * g *
         (c.hhat_right * c.hhat_right - c.h_right * c.h_right +
          (c.h_left + c.h_right) * (c.z_left - c.z_right) +
          c.h_left * c.h_left - c.hhat_left * c.hhat_left);
}

double source_high(const CellFaceData& c, double g) {
  // Richardson-extrapolated end/center product rule, locally fifth-order.
  const double fine = (c.h_left + c.h_center) * (c.z_left - c.z_center) +
                      (c.h_center + c.h_right) * (c.z_center - c.z_right);
  const double coarse = (c.h_left + c.h_right) * (c.z_left - c.z_right);
  const double g_tilde = (4.0 / 3.0) * fine - (1.0 / 3.0) * coarse;
  return 0.5 * g *
         (c.hhat_right * c.hhat_right - c.h_right * c.h_right + g_tilde +
          c.h_left * c.h_left - c.hhat_left * c.hhat_left);
}

}  // namespace swefv
