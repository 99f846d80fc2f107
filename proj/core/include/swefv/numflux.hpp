#pragma once

#include <algorithm>
#include <array>

#include "swefv/model.hpp"

namespace swefv {

struct FluxResult {
  std::array<double, 2> flux{0.0, 0.0};
  double alpha = 0.0;  // local viscosity speed
};

// Local Lax-Friedrichs (Rusanov) flux.
inline FluxResult llf_flux(SweState ul, SweState ur, const PhysConstants& pc) {
  const double alpha = std::max(max_wave_speed(ul, pc), max_wave_speed(ur, pc));
  const auto fl = physical_flux(ul, pc.g);
  const auto fr = physical_flux(ur, pc.g);
  FluxResult r;
  r.alpha = alpha;
  r.flux[0] = 0.5 * (fl[0] + fr[0]) - 0.5 * alpha * (ur.h - ul.h);
  r.flux[1] = 0.5 * (fl[1] + fr[1]) - 0.5 * alpha * (ur.q - ul.q);
  return r;
}

// Numerical entropy flux matched to the viscous form of the flux above,
// with the same viscosity speed alpha.
inline double llf_entropy_flux(SweState ul, SweState ur, double zl, double zr, double alpha,
                               const PhysConstants& pc) {
  return 0.5 * (entropy_flux(ul, zl, pc) + entropy_flux(ur, zr, pc)) -
         0.5 * alpha * (entropy(ur, zr, pc) - entropy(ul, zl, pc));
}

// Plain average of the exact entropy fluxes; consistent but not matched to
// the scheme's dissipation. Used for comparison runs.
inline double averaged_entropy_flux(SweState ul, SweState ur, double zl, double zr,
                                    const PhysConstants& pc) {
  return 0.5 * (entropy_flux(ul, zl, pc) + entropy_flux(ur, zr, pc));
}

}  // namespace swefv
