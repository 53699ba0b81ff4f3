// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Tolerances are fixed here, not tuned at runtime.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "pdcmode/analytic.hpp"
#include "pdcmode/corr_matrix.hpp"
#include "pdcmode/experiment.hpp"
#include "pdcmode/kernels.hpp"
#include "pdcmode/matcher.hpp"
#include "pdcmode/units.hpp"

using namespace pdcmode;

namespace {

int g_failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", index, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

// 1. numeric heralded-kernel purity vs the closed form, 1e-5 absolute,
//    under 1 second per case at grid n = 96.
void criterion_1() {
  bool pass = true;
  std::string detail;
  double worst = 0.0, slowest = 0.0;
  for (double mu_t : {0.1, 0.25, 0.5, 1.0, 2.0}) {
    const auto t0 = std::chrono::steady_clock::now();
    const TemporalScenario s = scenario_from_mu(mu_t, std::nullopt);
    const Grid1D grid = temporal_grid_for(s, 96);
    const double numeric = purity(build_cpp_temporal_numeric(s, grid));
    const double elapsed = seconds_since(t0);
    const double err = std::abs(numeric - p_temp(mu_t));
    worst = std::max(worst, err);
    slowest = std::max(slowest, elapsed);
    if (err >= 1e-5 || elapsed >= 1.0) {
      pass = false;
      detail += fmt(" mu_t=%g err=%.2e t=%.2fs", mu_t, err, elapsed);
    }
  }
  if (pass) detail = fmt("worst err=%.1e, slowest case %.2fs", worst, slowest);
  report(1, "temporal purity oracle", pass, detail);
}

// 2. numeric mode match vs the closed form over the 16-point lattice,
//    1e-5 absolute, under 5 seconds total.
void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  double worst = 0.0;
  for (double mu_t : {0.0, 0.25, 0.5, 1.0})
    for (double mu_A : {0.0, 0.25, 0.5, 1.0}) {
      const TemporalScenario s = scenario_from_mu(mu_t, mu_A);
      const Grid1D grid = temporal_grid_for(s, 96);
      const double m = mode_match(build_cpp_temporal_numeric(s, grid),
                                  build_dfg_temporal(s, grid));
      worst = std::max(worst, std::abs(m - m_temp(mu_t, mu_A)));
    }
  const double elapsed = seconds_since(t0);
  if (worst >= 1e-5) {
    pass = false;
    detail += fmt(" worst err=%.2e", worst);
  }
  if (elapsed >= 5.0) {
    pass = false;
    detail += fmt(" t=%.2fs", elapsed);
  }
  if (pass) detail = fmt("worst err=%.1e, %.2fs", worst, elapsed);
  report(2, "mode-matching oracle on the mu lattice", pass, detail);
}

// 3. curve ordering and the half-percent optimality gap over mu_t in [0, 0.5].
void criterion_3() {
  bool pass = true;
  std::string detail;
  double worst_gap = 0.0;
  for (int i = 0; i <= 50; ++i) {
    const double mu_t = 0.01 * i;
    const double sqrt_p = std::sqrt(p_temp(mu_t));
    const double m_opt = m_temp(mu_t, mu_A_max(mu_t));
    const double m_plane = m_temp(mu_t, 0.0);
    worst_gap = std::max(worst_gap, sqrt_p - m_opt);
    if (sqrt_p - m_opt > 0.005 || m_plane > m_opt + 1e-12 || m_opt > sqrt_p + 1e-12) {
      pass = false;
      detail += fmt(" mu_t=%.2f", mu_t);
    }
  }
  if (pass) detail = fmt("max gap %.4f", worst_gap);
  report(3, "matching-curve ordering and optimality gap", pass, detail);
}

// 4. numeric transverse purity vs the Gaussian-filter closed form,
//    1e-3 absolute at 48x48, under 10 seconds per case.
void criterion_4() {
  bool pass = true;
  std::string detail;
  double worst = 0.0, slowest = 0.0;
  for (double ratio : {0.1, 0.25, 0.5}) {
    const auto t0 = std::chrono::steady_clock::now();
    SpatialScenario s;
    s.pump.kappa = 1.0;
    s.filter.kind = GaussianSpatial{.kappa_t = ratio};
    const Grid2D grid = spatial_grid_for(s, 48);
    const double numeric = spatial_purity_streaming(s, grid);
    const double elapsed = seconds_since(t0);
    const double err = std::abs(numeric - p_sp_gaussian(ratio, 1.0));
    worst = std::max(worst, err);
    slowest = std::max(slowest, elapsed);
    if (err >= 1e-3 || elapsed >= 10.0) {
      pass = false;
      detail += fmt(" ratio=%g err=%.2e t=%.2fs", ratio, err, elapsed);
    }
  }
  if (pass) detail = fmt("worst err=%.1e, slowest case %.2fs", worst, slowest);
  report(4, "transverse purity oracle, gaussian filter", pass, detail);
}

// 5. quoted-value chain: overrides (0.85, 0.87), visibility 0.83.
void criterion_5() {
  LabParams p{.lambda_nm = 790.0,
              .tau_fund_ps = 1.6,
              .filter_fwhm_nm = 0.4,
              .pinhole_diameter_um = 50.0,
              .focal_mm = 80.0,
              .pump_fwhm_mm = 0.34,
              .visibility = 0.83};
  const ChainReport r = run_chain_with_overrides(p, 0.85, 0.87);
  bool pass = true;
  std::string detail;
  auto check = [&](const char* name, double got, double want) {
    const double err = std::abs(got - want);
    detail += fmt("%s%s=%.6f", detail.empty() ? "" : " ", name, got);
    if (err > 0.005) {
      pass = false;
      detail += fmt(" (outside %.2f+-0.005 by %.1e)", want, err - 0.005);
    }
  };
  check("sqrt_p", r.sqrt_p, 0.86);
  check("correction", r.linewidth_correction, 1.09);
  check("m_cl", r.m_cl, 0.75);
  check("m_total", r.m_total, 0.65);
  report(5, "quoted-value chain reproduction", pass, detail);
}

// 6. raw lab parameters: pinhole purity formula at 0.87 +- 0.01, full
//    numeric purity inside [0.86, 0.90], and the temporal closed form
//    inside [0.82, 0.90] under both pulse-width readings.
void criterion_6() {
  bool pass = true;
  std::string detail;

  const double p34 = p_sp_pinhole(25e-6, 0.34e-3, 790e-9, 0.08);
  detail += fmt("p_sp_formula=%.4f", p34);
  if (std::abs(p34 - 0.87) > 0.01) pass = false;

  SpatialScenario s;
  s.pump.kappa = dp_to_kappa_p(0.34e-3);
  s.filter.kind = Pinhole{.radius_rho = 25e-6, .focal_F = 0.08, .lambda_t = 790e-9};
  const double numeric = spatial_purity_streaming(s, spatial_grid_for(s, 48));
  detail += fmt(" p_sp_numeric=%.4f", numeric);
  if (!(numeric >= 0.86 && numeric <= 0.90)) pass = false;

  const double sigma_t = wt_to_sigma_t(1.2e12);
  for (double tau : {1.6e-12 / std::sqrt(2.0), 1.6e-12}) {
    const double p23 = p_temp(sigma_t / tau_p_to_sigma_p(tau));
    detail += fmt(" p_temp=%.4f", p23);
    if (!(p23 >= 0.82 && p23 <= 0.90)) pass = false;
  }
  report(6, "lab-parameter reproduction", pass, detail);
}

// 7. randomized property sweep: Cauchy-Schwarz, coherent-wave purity,
//    Hermiticity and positive semidefiniteness of every built kernel.
void criterion_7() {
  bool pass = true;
  std::string detail;
  std::mt19937 rng(881066);
  std::uniform_real_distribution<double> mu_t_dist(0.02, 2.0);
  std::uniform_real_distribution<double> mu_A_dist(0.0, 2.0);

  auto check_kernel = [&](const CorrMatrix& k, const char* tag) {
    double max_abs = 0.0, max_asym = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = i; j < k.size(); ++j) {
        max_abs = std::max(max_abs, std::abs(k.at(i, j)));
        max_asym = std::max(max_asym, std::abs(k.at(i, j) - std::conj(k.at(j, i))));
      }
    if (max_asym > 1e-12 * max_abs) {
      pass = false;
      detail += fmt(" %s not hermitian", tag);
    }
    if (min_eigenvalue(k) < -1e-10 * trace(k)) {
      pass = false;
      detail += fmt(" %s not psd", tag);
    }
  };

  double worst_cs = -1.0;
  for (int i = 0; i < 50; ++i) {
    const TemporalScenario s = scenario_from_mu(mu_t_dist(rng), mu_A_dist(rng));
    const Grid1D grid = temporal_grid_for(s, 96);
    const CorrMatrix cpp = build_cpp_temporal_numeric(s, grid);
    const CorrMatrix dfg = build_dfg_temporal(s, grid);
    const double m = mode_match(cpp, dfg);
    const double p1 = purity(cpp);
    const double p2 = purity(dfg);
    worst_cs = std::max(worst_cs, m * m - p1 * p2);
    if (m * m > p1 * p2 + 1e-9 || m > std::sqrt(p1) + 1e-9) {
      pass = false;
      detail += fmt(" cauchy-schwarz violated at run %d", i);
    }
    if (std::abs(p2 - 1.0) > 1e-9) {
      pass = false;
      detail += fmt(" coherent purity %.12f at run %d", p2, i);
    }
    check_kernel(cpp, "cpp");
    check_kernel(dfg, "dfg");
  }

  // transverse kernels, both filter kinds, on a PSD-check-sized grid
  {
    SpatialScenario s;
    s.pump.kappa = 1.0;
    s.filter.kind = GaussianSpatial{.kappa_t = 0.5};
    check_kernel(build_signal_spatial(s, spatial_grid_for(s, 16)), "spatial_gauss");
    s.pump.kappa = dp_to_kappa_p(0.34e-3);
    s.filter.kind = Pinhole{.radius_rho = 25e-6, .focal_F = 0.08, .lambda_t = 790e-9};
    check_kernel(build_signal_spatial(s, spatial_grid_for(s, 16)), "spatial_pinhole");
  }
  if (pass) detail = fmt("50 scenarios, worst M^2-P1P2=%.1e", worst_cs);
  report(7, "randomized property sweep", pass, detail);
}

// 8. advanced-wave identity: a diagonal (incoherent) trigger correlation
//    fed through the generic mixing builder reproduces the heralded kernel
//    entrywise within 1e-8 of its peak.
void criterion_8() {
  bool pass = true;
  std::string detail;
  for (double mu_t : {0.3, 0.8}) {
    const TemporalScenario s = scenario_from_mu(mu_t, std::nullopt);
    const Grid1D grid = temporal_grid_for(s, 96);
    const Grid1D inner = make_grid(s.filter.center_omega, auto_span({1.0, mu_t}),
                                   160, QuadRule::gauss_legendre);
    const CorrMatrix via_advanced =
        build_dfg_temporal_general(s, incoherent_trigger_corr(s, inner), grid);
    const CorrMatrix direct = build_cpp_temporal_numeric(s, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < direct.size(); ++i)
      for (std::size_t j = 0; j < direct.size(); ++j)
        worst = std::max(worst, std::abs(via_advanced.at(i, j) - direct.at(i, j)));
    detail += fmt("%smu_t=%g max|diff|/peak=%.1e", detail.empty() ? "" : " ", mu_t,
                  worst / direct.peak());
    if (worst >= 1e-8 * direct.peak()) pass = false;
  }
  report(8, "advanced-wave identity", pass, detail);
}

// 9. special function: frozen high-precision references at 1e-10 absolute
//    and the small-argument expansion of 2 J1(x)/x.
void criterion_9() {
  struct Ref {
    double x, j1;
  };
  const Ref refs[] = {
      {0.05, 0.02499218831375969913}, {0.5, 0.2422684576748738864},
      {1.0, 0.440050585744933516},    {2.0, 0.5767248077568733872},
      {3.8317059702075123, 6.2888607618057320e-18},
      {5.0, -0.3275791375914652220},  {8.0, 0.2346363468539146244},
      {12.0, -0.2234471044906276124}, {16.0, 0.09039717566130418624},
      {25.0, -0.1253502495802899047}, {50.0, -0.09751182812517513766},
  };
  bool pass = true;
  std::string detail;
  double worst = 0.0;
  for (const Ref& r : refs) {
    const double err = std::abs(bessel_j1(r.x) - r.j1);
    worst = std::max(worst, err);
    if (err > 1e-10) {
      pass = false;
      detail += fmt(" x=%g err=%.2e", r.x, err);
    }
  }
  const double x = 0.05;
  const double expansion_err = std::abs(jinc(x) - (1.0 - x * x / 8.0));
  if (expansion_err >= 1e-6) {
    pass = false;
    detail += fmt(" expansion err=%.2e", expansion_err);
  }
  if (pass) detail = fmt("worst ref err=%.1e", worst);
  report(9, "first-order bessel function", pass, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
