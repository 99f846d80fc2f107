#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace swefv {

//! 1D partition of an interval: N+1 strictly increasing interfaces with the
//! derived cell centers and widths. Immutable after construction.
class Grid {
 public:
  explicit Grid(std::vector<double> interfaces);

  std::size_t size() const { return widths_.size(); }
  double a() const { return interfaces_.front(); }
  double b() const { return interfaces_.back(); }
  double length() const { return b() - a(); }

  std::span<const double> interfaces() const { return interfaces_; }
  std::span<const double> centers() const { return centers_; }
  std::span<const double> widths() const { return widths_; }

  double interface(std::size_t i) const { return interfaces_[i]; }
  double center(std::size_t j) const { return centers_[j]; }
  double width(std::size_t j) const { return widths_[j]; }
  double min_width() const;

 private:
  std::vector<double> interfaces_;
  std::vector<double> centers_;
  std::vector<double> widths_;
};

Grid make_uniform(double a, double b, std::size_t n);

// Image of the uniform reference grid under w -> w + 0.02 sin(10 pi w),
// rescaled to [a, b]. Widths stay within (1 -/+ pi/5)/N of the mean.
Grid make_quasi_regular(double a, double b, std::size_t n);

// Interior interfaces of a uniform grid shifted by xi_j/(4N) with
// xi_j uniform in [-0.5, 0.5]; endpoints are never moved.
Grid make_random(double a, double b, std::size_t n, std::uint64_t seed);
Grid make_random(double a, double b, std::size_t n, std::span<const double> xi);

// Image of the uniform reference grid under w -> w + 3 w (1-w) (wc - w),
// concentrating cells near the image of wc. Throws if the map fails to be
// increasing on the requested partition.
Grid make_locally_refined(double a, double b, std::size_t n, double wc);

// Overlap-weighted projection of per-cell averages from one grid onto
// another covering the same interval; conserves the integral.
std::vector<double> project_averages(const Grid& source, std::span<const double> values,
                                     const Grid& target);

}  // namespace swefv
