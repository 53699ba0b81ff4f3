#pragma once

#include <optional>

#include "pdcmode/grid.hpp"
#include "pdcmode/kernels.hpp"

namespace pdcmode {

// Quadrature-side mode-matching summary for one temporal scenario.
// `bound` is sqrt(purity_cpp), the ceiling no classical wave can beat.
struct MatchResult {
  double purity_cpp = 0.0;
  double purity_classical = 0.0;
  double match = 0.0;
  double bound = 0.0;
  double mu_A_used = 0.0;
};

// Builds the heralded and difference-frequency kernels on `grid` and
// evaluates purity, match and the Cauchy-Schwarz bound numerically.
MatchResult evaluate_match(const TemporalScenario& s, const Grid1D& grid);

// Golden-section maximization of the numeric match over the alignment
// width, bracket mu_A in [0, 3 (1 + mu_t)], to width 1e-6.  Throws
// NumericError if the profile fails the unimodality check (optimum below a
// bracket end).
struct AlignmentOptimum {
  double mu_A_opt = 0.0;
  double match_opt = 0.0;
};
AlignmentOptimum optimize_alignment(const TemporalScenario& s, const Grid1D& grid);

// Numeric transverse purity next to the closed forms it should reproduce;
// the pinhole form is present only for top-hat filters.
struct SpatialPurityReport {
  double purity_numeric = 0.0;
  double purity_gaussian_formula = 0.0;
  std::optional<double> purity_pinhole_formula;
};
SpatialPurityReport spatial_purity_report(const SpatialScenario& s, const Grid2D& grid);

}  // namespace pdcmode
