#include "pdcmode/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pdcmode/errors.hpp"

namespace pdcmode {

QuadRule parse_quad_rule(const std::string& name) {
  if (name == "trapezoid") return QuadRule::trapezoid;
  if (name == "gauss_legendre") return QuadRule::gauss_legendre;
  throw DomainError("unknown quadrature rule '" + name +
                    "' (expected trapezoid or gauss_legendre)");
}

namespace {

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
// Legendre recurrence.
void gauss_legendre_reference(std::size_t n, std::vector<double>& x,
                              std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * static_cast<double>(j) + 1.0) * z * p2 -
              static_cast<double>(j) * p3) /
             (static_cast<double>(j) + 1.0);
      }
      pp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

}  // namespace

Grid1D make_grid(double center, double half_span, std::size_t n, QuadRule rule) {
  if (!(half_span > 0.0)) throw DomainError("make_grid: half_span must be > 0");
  if (n < 8) throw DomainError("make_grid: n must be >= 8");

  Grid1D g;
  g.center = center;
  g.half_span = half_span;
  g.rule = rule;
  g.points.resize(n);
  g.weights.resize(n);

  if (rule == QuadRule::trapezoid) {
    const double h = 2.0 * half_span / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      g.points[i] = center - half_span + h * static_cast<double>(i);
      g.weights[i] = h;
    }
    g.weights.front() *= 0.5;
    g.weights.back() *= 0.5;
  } else {
    std::vector<double> xr, wr;
    gauss_legendre_reference(n, xr, wr);
    for (std::size_t i = 0; i < n; ++i) {
      g.points[i] = center + half_span * xr[i];
      g.weights[i] = half_span * wr[i];
    }
  }
  return g;
}

Grid2D make_grid_2d(double center_x, double center_y, double half_span,
                    std::size_t n_per_axis, QuadRule rule) {
  Grid2D g;
  g.x = make_grid(center_x, half_span, n_per_axis, rule);
  g.y = make_grid(center_y, half_span, n_per_axis, rule);
  return g;
}

double auto_span(const std::vector<double>& sigma_list) {
  if (sigma_list.empty()) throw DomainError("auto_span: empty width list");
  double widest = 0.0;
  for (double s : sigma_list) {
    if (!(s >= 0.0)) throw DomainError("auto_span: widths must be >= 0");
    widest = std::max(widest, s);
  }
  if (!(widest > 0.0)) throw DomainError("auto_span: need at least one positive width");
  return 6.0 * widest;
}

}  // namespace pdcmode
