#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace swefv {

// Conserved shallow-water state: water height h and discharge q = h*v.
struct SweState {
  double h = 0.0;
  double q = 0.0;
};

struct PhysConstants {
  double g = 9.81;       // gravitational acceleration
  double eps_h = 1e-6;   // depth threshold for velocity desingularization
};

// Bounded velocity recovery near dry states. Returns q/h for h >= eps_h and
// the rational blend sqrt(2) h q / sqrt(h^4 + max(h^4, eps_h^4)) below it;
// the two branches agree at h == eps_h.
inline double desingularized_velocity(double h, double q, double eps_h) {
  if (h >= eps_h) return q / h;
  const double h4 = h * h * h * h;
  const double e4 = eps_h * eps_h * eps_h * eps_h;
  const double denom = std::sqrt(h4 + std::max(h4, e4));
  if (denom == 0.0) return 0.0;
  return std::sqrt(2.0) * h * q / denom;
}

// f(u) = (q, q^2/h + g h^2 / 2); a dry state carries zero flux.
inline std::array<double, 2> physical_flux(SweState u, double g) {
  if (u.h < 0.0) throw std::domain_error("physical_flux: negative water height");
  if (u.h == 0.0) return {0.0, 0.0};
  return {u.q, u.q * u.q / u.h + 0.5 * g * u.h * u.h};
}

inline double max_wave_speed(SweState u, const PhysConstants& pc) {
  if (u.h <= 0.0) return 0.0;
  const double v = desingularized_velocity(u.h, u.q, pc.eps_h);
  return std::abs(v) + std::sqrt(pc.g * u.h);
}

// Total energy including the bottom potential: eta = (h v^2 + g h^2)/2 + g h z.
inline double entropy(SweState u, double z, const PhysConstants& pc) {
  if (u.h <= 0.0) return 0.0;
  const double v = desingularized_velocity(u.h, u.q, pc.eps_h);
  return 0.5 * (u.h * v * v + pc.g * u.h * u.h) + pc.g * u.h * z;
}

// psi = (eta + g h^2 / 2) v.
inline double entropy_flux(SweState u, double z, const PhysConstants& pc) {
  if (u.h <= 0.0) return 0.0;
  const double v = desingularized_velocity(u.h, u.q, pc.eps_h);
  return (entropy(u, z, pc) + 0.5 * pc.g * u.h * u.h) * v;
}

}  // namespace swefv
