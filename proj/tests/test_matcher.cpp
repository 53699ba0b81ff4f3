#include <cmath>
#include <cstring>
#include <random>

#include "doctest.h"
#include "pdcmode/analytic.hpp"
#include "pdcmode/errors.hpp"
#include "pdcmode/matcher.hpp"
#include "pdcmode/units.hpp"

using namespace pdcmode;

TEST_CASE("evaluate_match against the closed forms") {
  {
    const TemporalScenario s = scenario_from_mu(0.0, 0.0);
    const MatchResult r = evaluate_match(s, temporal_grid_for(s));
    CHECK(r.match == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.bound == doctest::Approx(1.0).epsilon(1e-9));
  }
  {
    const double mu_t = 0.5;
    const double mu_A = mu_A_max(mu_t);
    const TemporalScenario s = scenario_from_mu(mu_t, mu_A);
    const MatchResult r = evaluate_match(s, temporal_grid_for(s));
    CHECK(std::abs(r.match - m_temp(mu_t, mu_A)) < 1e-5);
    CHECK(r.bound == doctest::Approx(std::sqrt(p_temp(mu_t))).epsilon(1e-6));
    CHECK(r.purity_classical == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.mu_A_used == doctest::Approx(mu_A));
  }
  const TemporalScenario no_align = scenario_from_mu(0.5, std::nullopt);
  CHECK_THROWS_AS(evaluate_match(no_align, temporal_grid_for(no_align)), DomainError);
}

TEST_CASE("match never exceeds the bound") {
  std::mt19937 rng(90125);
  std::uniform_real_distribution<double> mu_t_dist(0.0, 2.0);
  std::uniform_real_distribution<double> mu_A_dist(0.0, 2.0);
  for (int k = 0; k < 20; ++k) {
    const TemporalScenario s = scenario_from_mu(mu_t_dist(rng), mu_A_dist(rng));
    const MatchResult r = evaluate_match(s, temporal_grid_for(s));
    CHECK(r.match <= r.bound + 1e-9);
    CHECK(r.match * r.match <= r.purity_cpp * r.purity_classical + 1e-9);
  }
}

TEST_CASE("optimize_alignment finds the closed-form optimum") {
  {
    const TemporalScenario s = scenario_from_mu(0.0, std::nullopt);
    const AlignmentOptimum opt = optimize_alignment(s, temporal_grid_for(s));
    CHECK(std::abs(opt.mu_A_opt) < 1e-3);
  }
  for (double mu_t : {0.25, 0.5, 1.0}) {
    const TemporalScenario s = scenario_from_mu(mu_t, mu_A_max(mu_t));
    const Grid1D grid = temporal_grid_for(s);
    const AlignmentOptimum opt = optimize_alignment(s, grid);
    CHECK(std::abs(opt.mu_A_opt - mu_A_max(mu_t)) < 1e-3);
    CHECK(std::abs(opt.match_opt - m_temp(mu_t, mu_A_max(mu_t))) < 1e-5);
  }
}

TEST_CASE("optimize_alignment is deterministic") {
  const TemporalScenario s = scenario_from_mu(0.7, mu_A_max(0.7));
  const Grid1D grid = temporal_grid_for(s);
  const AlignmentOptimum a = optimize_alignment(s, grid);
  const AlignmentOptimum b = optimize_alignment(s, grid);
  CHECK(std::memcmp(&a.mu_A_opt, &b.mu_A_opt, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.match_opt, &b.match_opt, sizeof(double)) == 0);
}

TEST_CASE("spatial purity report") {
  {
    SpatialScenario s;
    s.pump.kappa = 1.0;
    s.filter.kind = GaussianSpatial{.kappa_t = 0.5};
    const SpatialPurityReport r = spatial_purity_report(s, spatial_grid_for(s, 24));
    CHECK(std::abs(r.purity_numeric - 2.0 / 3.0) < 1e-3);
    CHECK(r.purity_gaussian_formula == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(!r.purity_pinhole_formula.has_value());
  }
  {
    SpatialScenario s;
    s.pump.kappa = dp_to_kappa_p(0.34e-3);
    s.filter.kind = Pinhole{.radius_rho = 25e-6, .focal_F = 0.08, .lambda_t = 790e-9};
    const SpatialPurityReport r = spatial_purity_report(s, spatial_grid_for(s, 48));
    CHECK(r.purity_numeric > 0.86);
    CHECK(r.purity_numeric < 0.90);
    REQUIRE(r.purity_pinhole_formula.has_value());
    CHECK(std::abs(*r.purity_pinhole_formula - 0.87) < 0.01);
  }
  {
    SpatialScenario s;
    s.pump.kappa = 1.0;
    s.filter.kind = GaussianSpatial{.kappa_t = 1e-6};
    const SpatialPurityReport r = spatial_purity_report(s, spatial_grid_for(s, 24));
    CHECK(r.purity_numeric == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.purity_gaussian_formula == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("numeric spatial purity converges with grid refinement") {
  SpatialScenario s;
  s.pump.kappa = 1.0;
  s.filter.kind = GaussianSpatial{.kappa_t = 0.4};
  const double exact = p_sp_gaussian(0.4, 1.0);
  const double err48 =
      std::abs(spatial_purity_streaming(s, spatial_grid_for(s, 48)) - exact);
  const double err96 =
      std::abs(spatial_purity_streaming(s, spatial_grid_for(s, 96)) - exact);
  CHECK(err48 < 1e-3);
  CHECK(err96 <= err48 + 1e-10);
}
