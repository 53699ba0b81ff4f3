#include "pdcmode/matcher.hpp"

#include <cmath>

#include "pdcmode/analytic.hpp"
#include "pdcmode/errors.hpp"
#include "pdcmode/units.hpp"

namespace pdcmode {

MatchResult evaluate_match(const TemporalScenario& s, const Grid1D& grid) {
  s.validate();
  if (!s.alignment)
    throw DomainError("evaluate_match: scenario has no alignment beam");

  const CorrMatrix cpp = build_cpp_temporal_numeric(s, grid);
  const CorrMatrix dfg = build_dfg_temporal(s, grid);

  MatchResult r;
  r.purity_cpp = purity(cpp);
  r.purity_classical = purity(dfg);
  r.match = mode_match(cpp, dfg);
  r.bound = std::sqrt(r.purity_cpp);
  r.mu_A_used = s.alignment->sigma_omega / s.pump.sigma_omega;
  return r;
}

AlignmentOptimum optimize_alignment(const TemporalScenario& s, const Grid1D& grid) {
  s.validate();
  const CorrMatrix cpp = build_cpp_temporal_numeric(s, grid);

  auto match_at = [&](double mu_A) {
    TemporalScenario cand = s;
    cand.alignment = FieldSpec{.center_omega = s.filter.center_omega,
                               .sigma_omega = mu_A * s.pump.sigma_omega};
    return mode_match(cpp, build_dfg_temporal(cand, grid));
  };

  double a = 0.0;
  double b = 3.0 * (1.0 + s.mu_t());
  const double fa = match_at(a);
  const double fb = match_at(b);

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = match_at(x1);
  double f2 = match_at(x2);
  double lo = a, hi = b;
  while (hi - lo > 1e-6) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = match_at(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = match_at(x1);
    }
  }
  AlignmentOptimum opt;
  opt.mu_A_opt = 0.5 * (lo + hi);
  opt.match_opt = match_at(opt.mu_A_opt);
  // an interior value below both ends means the profile dips in the middle
  if (opt.match_opt + 1e-9 < fa && opt.match_opt + 1e-9 < fb)
    throw NumericError("optimize_alignment: match profile is not unimodal");
  // a maximum at a bracket end (monotone profile) is legitimate
  if (fa > opt.match_opt) opt = {a, fa};
  if (fb > opt.match_opt) opt = {b, fb};
  return opt;
}

SpatialPurityReport spatial_purity_report(const SpatialScenario& s, const Grid2D& grid) {
  s.validate();
  SpatialPurityReport r;
  r.purity_numeric = spatial_purity_streaming(s, grid);
  r.purity_gaussian_formula = p_sp_gaussian(s.kappa_t_equivalent(), s.pump.kappa);
  if (s.filter.is_pinhole()) {
    const auto& p = std::get<Pinhole>(s.filter.kind);
    r.purity_pinhole_formula = p_sp_pinhole(
        p.radius_rho, kappa_p_to_dp(s.pump.kappa), p.lambda_t, p.focal_F);
  }
  return r;
}

}  // namespace pdcmode
