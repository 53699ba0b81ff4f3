#pragma once

#include <cstddef>
#include <optional>

#include "pdcmode/corr_matrix.hpp"
#include "pdcmode/grid.hpp"
#include "pdcmode/units.hpp"

namespace pdcmode {

// Collinear pulsed configuration in the temporal (frequency) domain: the
// heralded signal mode sits at omega_s0 = pump.center_omega -
// filter.center_omega, and its kernel is set by the pump linewidth and the
// spectral trigger filter.  The optional alignment beam drives the
// difference-frequency wave used for mode matching.
struct TemporalScenario {
  FieldSpec pump;
  FilterSpec filter;  // GaussianSpectral
  std::optional<FieldSpec> alignment;

  void validate() const;
  double omega_s0() const { return pump.center_omega - filter.center_omega; }
  double sigma_t() const;
  double mu_t() const { return sigma_t() / pump.sigma_omega; }
};

// Transverse-plane configuration: pump momentum width kappa_p plus a
// Gaussian or top-hat spatial trigger filter.
struct SpatialScenario {
  FieldSpec pump;    // kappa used
  FilterSpec filter;  // GaussianSpatial or Pinhole

  void validate() const;
  double kappa_t_equivalent() const;
};

// Convenience scenario with unit pump width: sigma_p = 1, sigma_t = mu_t,
// sigma_A = mu_A (alignment present only when mu_A is given).
TemporalScenario scenario_from_mu(double mu_t, std::optional<double> mu_A);

// Frequency grid wide enough for every kernel the scenario can produce
// (heralded, difference-frequency, and their diagonals), with the node
// count raised above base_n when the span grows past what base_n resolves.
Grid1D temporal_grid_for(const TemporalScenario& s, std::size_t base_n = 96,
                         QuadRule rule = QuadRule::gauss_legendre);

// Transverse grid sized by the pump envelope, which bounds the signal
// kernel support.
Grid2D spatial_grid_for(const SpatialScenario& s, std::size_t n_per_axis = 48);

// Heralded-photon kernel by quadrature of
//   Phi(w,w') ~ integral dv T(v) Ep*(w+v) Ep(w'+v),
// with the inner integral on its own Gauss-Legendre grid.  Trace-normalized.
// Throws NumericError if the grid truncates the kernel diagonal above 1e-12
// of its peak.
CorrMatrix build_cpp_temporal_numeric(const TemporalScenario& s, const Grid1D& grid);

// Same kernel sampled from its closed form
//   Phi(w,w') ~ exp(-((w-w0)^2+(w'-w0)^2)/(sp^2+2 st^2)
//               - st^2 (w-w')^2 / (sp^2 (sp^2+2 st^2))).
CorrMatrix build_cpp_temporal_analytic(const TemporalScenario& s, const Grid1D& grid);

// Difference-frequency kernel for a coherent Gaussian alignment beam:
// rank-1, Gamma(w,w') ~ exp(-((w-w0)^2+(w'-w0)^2)/(sp^2+sA^2)).
// sigma_A = 0 is the plane-wave alignment limit.
CorrMatrix build_dfg_temporal(const TemporalScenario& s, const Grid1D& grid);

// Difference-frequency kernel for an arbitrary (partially coherent)
// alignment correlation Gamma_A sampled on its own frequency grid:
//   Gamma(w,w') = sum_kl wk wl Ep*(w+vk) Gamma_A*(vk,vl) Ep(w'+vl).
// Feeding a diagonal (fully incoherent) Gamma_A = T reproduces the heralded
// kernel; feeding Ep_A* Ep_A reproduces build_dfg_temporal.
CorrMatrix build_dfg_temporal_general(const TemporalScenario& s,
                                      const CorrMatrix& gamma_A,
                                      const Grid1D& grid);

// Diagonal alignment correlation encoding the filter transmission as a
// discrete delta: Gamma_A[i][i] = T(v_i) / w_i on the given grid.
CorrMatrix incoherent_trigger_corr(const TemporalScenario& s, const Grid1D& grid);

// Transverse correlation of the wave that the trigger filter admits,
// propagated to the crystal plane: Gaussian filter gives
// exp(-(kappa_t |r-r'| / 2)^2), a pinhole gives 2 J1(x)/x with
// x = k_t rho |r-r'| / F.  Unit diagonal.
CorrMatrix build_advanced_wave_spatial(const FilterSpec& filter, const Grid2D& grid);

// Transverse signal kernel Ep*(r) Ep(r') Gamma_t*(r,r'), trace-normalized.
CorrMatrix build_signal_spatial(const SpatialScenario& s, const Grid2D& grid);

// Purity of the transverse signal kernel accumulated pair-by-pair without
// materializing the kernel matrix; equals purity(build_signal_spatial).
double spatial_purity_streaming(const SpatialScenario& s, const Grid2D& grid);

}  // namespace pdcmode
