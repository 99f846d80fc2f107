#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace swefv {

// Uniform double in [0,1) built from the top 53 bits of the generator output.
// std::uniform_real_distribution is implementation-defined; this mapping keeps
// runs reproducible across compilers for a given seed.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// 3-point Gauss-Legendre average of f over [xl, xr]; exact for degree <= 5.
template <class F>
double gauss3_average(F&& f, double xl, double xr) {
  constexpr double node = 0.7745966692414834;  // sqrt(3/5)
  const double xm = 0.5 * (xl + xr);
  const double hw = 0.5 * (xr - xl);
  return (5.0 * f(xm - node * hw) + 8.0 * f(xm) + 5.0 * f(xm + node * hw)) / 18.0;
}

// Least-squares decay rate r such that err ~ C * N^(-r).
inline double fitted_decay_rate(std::span<const double> ns, std::span<const double> errs) {
  const std::size_t m = ns.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = std::log(ns[i]);
    const double y = std::log(errs[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double denom = m * sxx - sx * sx;
  return -(m * sxy - sx * sy) / denom;
}

}  // namespace swefv
