#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pdcmode {

enum class QuadRule { trapezoid, gauss_legendre };

QuadRule parse_quad_rule(const std::string& name);

// One discretized axis with quadrature weights.  Points are strictly
// increasing, weights positive, and sum(weights) equals the span
// 2*half_span (exactly for Gauss-Legendre, to 1e-12 relative for the
// trapezoid rule).
struct Grid1D {
  std::vector<double> points;
  std::vector<double> weights;
  double center = 0.0;
  double half_span = 0.0;
  QuadRule rule = QuadRule::gauss_legendre;

  std::size_t size() const { return points.size(); }
};

// Cartesian product of two axes with product weights, flattened row-major
// over (x, y): flat index = ix * y.size() + iy.
struct Grid2D {
  Grid1D x;
  Grid1D y;

  std::size_t size() const { return x.size() * y.size(); }
  double point_x(std::size_t flat) const { return x.points[flat / y.size()]; }
  double point_y(std::size_t flat) const { return y.points[flat % y.size()]; }
  double weight(std::size_t flat) const {
    return x.weights[flat / y.size()] * y.weights[flat % y.size()];
  }
};

// Grid over [center - half_span, center + half_span] with n >= 8 nodes.
Grid1D make_grid(double center, double half_span, std::size_t n, QuadRule rule);

Grid2D make_grid_2d(double center_x, double center_y, double half_span,
                    std::size_t n_per_axis, QuadRule rule = QuadRule::trapezoid);

// Half-span large enough that a Gaussian exp(-x^2/sigma^2) of the widest
// listed sigma is truncated below 1e-15 of its mass: 6 * max(sigma).
double auto_span(const std::vector<double>& sigma_list);

}  // namespace pdcmode
