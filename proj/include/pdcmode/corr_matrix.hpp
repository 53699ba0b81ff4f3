#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "pdcmode/grid.hpp"

namespace pdcmode {

using Complex = std::complex<double>;

// Discretized two-point correlation function Gamma(x, x'), stored as raw
// kernel samples over (grid x grid); quadrature weights enter the
// functionals, not the stored values.  Construction enforces Hermiticity
// (symmetrizing away rounding noise below 1e-12 of the largest entry) and a
// real, non-negative diagonal.
class CorrMatrix {
 public:
  using GridVariant = std::variant<Grid1D, Grid2D>;

  CorrMatrix(GridVariant grid, std::vector<Complex> values, std::string label);

  std::size_t size() const { return n_; }
  const GridVariant& grid() const { return grid_; }
  const std::string& label() const { return label_; }
  const std::vector<double>& flat_weights() const { return weights_; }

  const Complex& at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  const std::vector<Complex>& values() const { return values_; }

  // Largest |entry|; 0 for an all-zero kernel.
  double peak() const;

  void scale(double factor);

  bool same_grid_as(const CorrMatrix& other) const;

 private:
  GridVariant grid_;
  std::vector<double> weights_;  // flattened quadrature weights
  std::vector<Complex> values_;  // row-major n x n
  std::string label_;
  std::size_t n_ = 0;
};

// Weighted diagonal sum sum_i w_i Gamma(x_i, x_i); real by construction.
double trace(const CorrMatrix& g);

// (sum_ij w_i w_j |Gamma_ij|^2) / trace^2 -- equals Tr(rho^2) for a
// trace-normalized density matrix; 1 for coherent (rank-1) kernels.
double purity(const CorrMatrix& g);

// |sum_ij w_i w_j G1_ij conj(G2_ij)| / (trace(G1) trace(G2)); the degree of
// mode matching between two waves on the same grid.  Symmetric under swap
// and invariant under positive rescaling of either argument.
double mode_match(const CorrMatrix& g1, const CorrMatrix& g2);

// Smallest eigenvalue of the weighted kernel sqrt(w) G sqrt(w), by cyclic
// Jacobi rotations until the off-diagonal norm falls below 1e-12 of its
// initial value (NumericError after 100 sweeps).
double min_eigenvalue(const CorrMatrix& g);

// Rescales values so that trace(g) == 1.
void normalize_trace(CorrMatrix& g);

// Samples fn over the grid into a CorrMatrix.
CorrMatrix corr_from_fn(const Grid1D& grid,
                        const std::function<Complex(double, double)>& fn,
                        std::string label);
CorrMatrix corr_from_fn_2d(
    const Grid2D& grid,
    const std::function<Complex(double, double, double, double)>& fn,
    std::string label);

// CSV export: one header row of grid coordinates, then one row per grid
// point holding re,im pairs of the kernel entries.
void write_csv(const CorrMatrix& g, std::ostream& out);

}  // namespace pdcmode
