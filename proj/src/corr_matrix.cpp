#include "pdcmode/corr_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "pdcmode/errors.hpp"

namespace pdcmode {

namespace {

std::vector<double> flatten_weights(const CorrMatrix::GridVariant& grid) {
  if (const auto* g1 = std::get_if<Grid1D>(&grid)) return g1->weights;
  const auto& g2 = std::get<Grid2D>(grid);
  std::vector<double> w(g2.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = g2.weight(i);
  return w;
}

std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

CorrMatrix::CorrMatrix(GridVariant grid, std::vector<Complex> values,
                       std::string label)
    : grid_(std::move(grid)), values_(std::move(values)), label_(std::move(label)) {
  weights_ = flatten_weights(grid_);
  n_ = weights_.size();
  if (values_.size() != n_ * n_)
    throw ShapeError("CorrMatrix: value count does not match grid size");

  double max_abs = 0.0;
  for (const Complex& v : values_) max_abs = std::max(max_abs, std::abs(v));

  // Hermiticity: reject genuine violations, symmetrize rounding noise.
  double max_asym = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      max_asym = std::max(max_asym,
                          std::abs(values_[i * n_ + j] - std::conj(values_[j * n_ + i])));
  if (max_asym > 1e-12 * max_abs)
    throw InvariantError("CorrMatrix '" + label_ + "': kernel is not Hermitian");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Complex sym =
          0.5 * (values_[i * n_ + j] + std::conj(values_[j * n_ + i]));
      values_[i * n_ + j] = sym;
      values_[j * n_ + i] = std::conj(sym);
    }
    values_[i * n_ + i] = Complex(values_[i * n_ + i].real(), 0.0);
  }

  double max_diag = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    max_diag = std::max(max_diag, values_[i * n_ + i].real());
  for (std::size_t i = 0; i < n_; ++i)
    if (values_[i * n_ + i].real() < -1e-12 * max_diag)
      throw InvariantError("CorrMatrix '" + label_ + "': negative diagonal intensity");
}

double CorrMatrix::peak() const {
  double p = 0.0;
  for (const Complex& v : values_) p = std::max(p, std::abs(v));
  return p;
}

void CorrMatrix::scale(double factor) {
  for (Complex& v : values_) v *= factor;
}

bool CorrMatrix::same_grid_as(const CorrMatrix& other) const {
  if (n_ != other.n_) return false;
  if (grid_.index() != other.grid_.index()) return false;
  if (const auto* a = std::get_if<Grid1D>(&grid_)) {
    const auto& b = std::get<Grid1D>(other.grid_);
    return a->points == b.points && a->weights == b.weights;
  }
  const auto& a = std::get<Grid2D>(grid_);
  const auto& b = std::get<Grid2D>(other.grid_);
  return a.x.points == b.x.points && a.y.points == b.y.points &&
         a.x.weights == b.x.weights && a.y.weights == b.y.weights;
}

double trace(const CorrMatrix& g) {
  const std::size_t n = g.size();
  const auto& w = g.flat_weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += w[i] * g.at(i, i).real();
  if (!(sum > 0.0))
    throw DomainError("CorrMatrix '" + g.label() + "': non-positive trace");
  return sum;
}

double purity(const CorrMatrix& g) {
  const double tr = trace(g);
  const std::size_t n = g.size();
  const auto& w = g.flat_weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += w[j] * std::norm(g.at(i, j));
    acc += w[i] * row;
  }
  return acc / (tr * tr);
}

double mode_match(const CorrMatrix& g1, const CorrMatrix& g2) {
  if (!g1.same_grid_as(g2))
    throw ShapeError("mode_match: kernels live on different grids");
  const double tr1 = trace(g1);
  const double tr2 = trace(g2);
  const std::size_t n = g1.size();
  const auto& w = g1.flat_weights();
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    Complex row(0.0, 0.0);
    // product first: the summands are then exactly conjugate under swap
    for (std::size_t j = 0; j < n; ++j)
      row += w[j] * (g1.at(i, j) * std::conj(g2.at(i, j)));
    acc += w[i] * row;
  }
  return std::abs(acc) / (tr1 * tr2);
}

double min_eigenvalue(const CorrMatrix& g) {
  const std::size_t n = g.size();
  const auto& w = g.flat_weights();
  std::vector<double> sw(n);
  for (std::size_t i = 0; i < n; ++i) sw[i] = std::sqrt(w[i]);

  std::vector<Complex> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = sw[i] * g.at(i, j) * sw[j];

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a[i * n + j]);
    return std::sqrt(s);
  };

  const double off0 = off_norm();
  if (off0 > 0.0) {
    bool converged = false;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const Complex apq = a[p * n + q];
          const double gmag = std::abs(apq);
          if (gmag <= 1e-300) continue;
          const double app = a[p * n + p].real();
          const double aqq = a[q * n + q].real();
          const Complex u = apq / gmag;
          const double tau = (aqq - app) / (2.0 * gmag);
          const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;

          a[p * n + p] = Complex(app - t * gmag, 0.0);
          a[q * n + q] = Complex(aqq + t * gmag, 0.0);
          a[p * n + q] = Complex(0.0, 0.0);
          a[q * n + p] = Complex(0.0, 0.0);
          for (std::size_t k = 0; k < n; ++k) {
            if (k == p || k == q) continue;
            const Complex akp = a[k * n + p];
            const Complex akq = a[k * n + q];
            const Complex np = c * akp - s * std::conj(u) * akq;
            const Complex nq = s * u * akp + c * akq;
            a[k * n + p] = np;
            a[p * n + k] = std::conj(np);
            a[k * n + q] = nq;
            a[q * n + k] = std::conj(nq);
          }
        }
      }
      converged = off_norm() < 1e-12 * off0;
    }
    if (!converged)
      throw NumericError("min_eigenvalue: Jacobi sweep limit reached");
  }

  double lo = a[0].real();
  for (std::size_t i = 1; i < n; ++i) lo = std::min(lo, a[i * n + i].real());
  return lo;
}

void normalize_trace(CorrMatrix& g) {
  const double tr = trace(g);
  g.scale(1.0 / tr);
}

CorrMatrix corr_from_fn(const Grid1D& grid,
                        const std::function<Complex(double, double)>& fn,
                        std::string label) {
  const std::size_t n = grid.size();
  std::vector<Complex> v(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      v[i * n + j] = fn(grid.points[i], grid.points[j]);
  return CorrMatrix(grid, std::move(v), std::move(label));
}

CorrMatrix corr_from_fn_2d(
    const Grid2D& grid,
    const std::function<Complex(double, double, double, double)>& fn,
    std::string label) {
  const std::size_t n = grid.size();
  std::vector<Complex> v(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = grid.point_x(i);
    const double yi = grid.point_y(i);
    for (std::size_t j = 0; j < n; ++j)
      v[i * n + j] = fn(xi, yi, grid.point_x(j), grid.point_y(j));
  }
  return CorrMatrix(grid, std::move(v), std::move(label));
}

void write_csv(const CorrMatrix& g, std::ostream& out) {
  const std::size_t n = g.size();
  if (const auto* g1 = std::get_if<Grid1D>(&g.grid())) {
    for (std::size_t i = 0; i < n; ++i)
      out << (i ? "," : "") << format_g17(g1->points[i]);
  } else {
    const auto& g2 = std::get<Grid2D>(g.grid());
    for (std::size_t i = 0; i < n; ++i)
      out << (i ? "," : "") << format_g17(g2.point_x(i)) << ';'
          << format_g17(g2.point_y(i));
  }
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex& v = g.at(i, j);
      out << (j ? "," : "") << format_g17(v.real()) << ',' << format_g17(v.imag());
    }
    out << '\n';
  }
}

}  // namespace pdcmode
