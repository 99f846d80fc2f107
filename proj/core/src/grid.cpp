#include "swefv/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "swefv/util.hpp"

namespace swefv {

Grid::Grid(std::vector<double> interfaces) : interfaces_(std::move(interfaces)) {
  if (interfaces_.size() < 2) throw std::invalid_argument("Grid: need at least one cell");
  const std::size_t n = interfaces_.size() - 1;
  centers_.resize(n);
  widths_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double xl = interfaces_[j];
    const double xr = interfaces_[j + 1];
    if (!(xr > xl)) throw std::invalid_argument("Grid: interfaces not strictly increasing");
    centers_[j] = 0.5 * (xl + xr);
    widths_[j] = xr - xl;
  }
}

double Grid::min_width() const {
  return *std::min_element(widths_.begin(), widths_.end());
}

namespace {

// Interfaces as the image of j/N under a reference map on [0,1], rescaled to [a,b].
template <class Map>
std::vector<double> mapped_interfaces(double a, double b, std::size_t n, Map&& phi) {
  if (!(a < b)) throw std::invalid_argument("grid: invalid domain");
  if (n == 0) throw std::invalid_argument("grid: need at least one cell");
  std::vector<double> x(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const double w = static_cast<double>(j) / static_cast<double>(n);
    x[j] = a + (b - a) * phi(w);
  }
  x.front() = a;
  x.back() = b;
  return x;
}

}  // namespace

Grid make_uniform(double a, double b, std::size_t n) {
  return Grid(mapped_interfaces(a, b, n, [](double w) { return w; }));
}

Grid make_quasi_regular(double a, double b, std::size_t n) {
  return Grid(mapped_interfaces(a, b, n, [](double w) {
    return w + 0.02 * std::sin(10.0 * std::numbers::pi * w);
  }));
}

Grid make_random(double a, double b, std::size_t n, std::span<const double> xi) {
  if (!(a < b)) throw std::invalid_argument("grid: invalid domain");
  if (n == 0) throw std::invalid_argument("grid: need at least one cell");
  if (xi.size() + 1 != n) throw std::invalid_argument("make_random: need n-1 shifts");
  std::vector<double> x(n + 1);
  const double nd = static_cast<double>(n);
  x[0] = a;
  x[n] = b;
  for (std::size_t j = 1; j < n; ++j)
    x[j] = a + (b - a) * (static_cast<double>(j) / nd + xi[j - 1] / (4.0 * nd));
  return Grid(std::move(x));
}

Grid make_random(double a, double b, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> xi(n > 0 ? n - 1 : 0);
  for (double& s : xi) s = uniform01(rng) - 0.5;
  return make_random(a, b, n, xi);
}

Grid make_locally_refined(double a, double b, std::size_t n, double wc) {
  return Grid(mapped_interfaces(a, b, n, [wc](double w) {
    return w + 3.0 * w * (1.0 - w) * (wc - w);
  }));
}

std::vector<double> project_averages(const Grid& source, std::span<const double> values,
                                     const Grid& target) {
  if (values.size() != source.size())
    throw std::invalid_argument("project_averages: field size mismatch");
  const double tol = 1e-12 * source.length();
  if (std::abs(source.a() - target.a()) > tol || std::abs(source.b() - target.b()) > tol)
    throw std::invalid_argument("project_averages: domains differ");

  std::vector<double> out(target.size());
  std::size_t s = 0;
  for (std::size_t t = 0; t < target.size(); ++t) {
    const double tl = target.interface(t);
    const double tr = target.interface(t + 1);
    double acc = 0.0;
    while (s < source.size() && source.interface(s + 1) <= tl) ++s;
    for (std::size_t k = s; k < source.size() && source.interface(k) < tr; ++k) {
      const double lo = std::max(tl, source.interface(k));
      const double hi = std::min(tr, source.interface(k + 1));
      if (hi > lo) acc += values[k] * (hi - lo);
    }
    out[t] = acc / target.width(t);
  }
  return out;
}

}  // namespace swefv
