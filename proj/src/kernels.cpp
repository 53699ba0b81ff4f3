#include "pdcmode/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pdcmode/analytic.hpp"
#include "pdcmode/errors.hpp"

namespace pdcmode {

namespace {

constexpr double kEdgeTruncationTol = 1e-12;  // of the peak diagonal value

double sqr(double v) { return v * v; }

// Nodes needed to resolve the narrowest kernel feature over the span.
std::size_t nodes_for(double half_span, double narrowest, std::size_t base_n,
                      double per_width = 4.0) {
  const double needed = per_width * half_span / narrowest;
  return std::max(base_n, static_cast<std::size_t>(std::ceil(needed)));
}

// Rejects grids whose boundary still carries kernel weight.
void check_diagonal_truncation(const CorrMatrix& m, const char* who) {
  double peak = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    peak = std::max(peak, m.at(i, i).real());

  auto check = [&](std::size_t i) {
    if (m.at(i, i).real() > kEdgeTruncationTol * peak)
      throw NumericError(std::string(who) +
                         ": grid too narrow, kernel truncated at the boundary");
  };
  if (std::holds_alternative<Grid1D>(m.grid())) {
    check(0);
    check(m.size() - 1);
  } else {
    const auto& g2 = std::get<Grid2D>(m.grid());
    const std::size_t nx = g2.x.size(), ny = g2.y.size();
    for (std::size_t ix = 0; ix < nx; ++ix)
      for (std::size_t iy = 0; iy < ny; ++iy)
        if (ix == 0 || iy == 0 || ix + 1 == nx || iy + 1 == ny)
          check(ix * ny + iy);
  }
}

double max_spacing(const Grid1D& g) {
  double h = 0.0;
  for (std::size_t i = 1; i < g.size(); ++i)
    h = std::max(h, g.points[i] - g.points[i - 1]);
  return h;
}

// The filter correlation length must be resolved by the transverse grid.
void check_spatial_resolution(const SpatialScenario& s, const Grid2D& grid) {
  const double kappa_t = s.kappa_t_equivalent();
  if (kappa_t <= 0.0) return;
  const double coherence = std::numbers::sqrt2 / kappa_t;
  const double h = std::max(max_spacing(grid.x), max_spacing(grid.y));
  if (h > 0.5 * coherence)
    throw NumericError(
        "spatial grid too coarse to resolve the trigger-filter correlation");
}

double filter_gamma_t(const FilterSpec& filter, double separation) {
  if (const auto* g = std::get_if<GaussianSpatial>(&filter.kind))
    return std::exp(-sqr(g->kappa_t * separation / 2.0));
  const auto& p = std::get<Pinhole>(filter.kind);
  const double k_t = 2.0 * std::numbers::pi / p.lambda_t;
  return jinc(k_t * p.radius_rho * separation / p.focal_F);
}

}  // namespace

double TemporalScenario::sigma_t() const {
  return std::get<GaussianSpectral>(filter.kind).sigma_t;
}

void TemporalScenario::validate() const {
  pump.validate();
  if (!(pump.sigma_omega > 0.0))
    throw DomainError("TemporalScenario: pump linewidth must be > 0");
  if (!filter.is_spectral())
    throw DomainError("TemporalScenario: filter must be a spectral Gaussian");
  filter.validate();
  if (!(omega_s0() > 0.0))
    throw DomainError("TemporalScenario: signal center frequency must be > 0");
  if (alignment) {
    alignment->validate();
    if (alignment->center_omega != filter.center_omega)
      throw DomainError(
          "TemporalScenario: alignment beam must be centered on the filter");
  }
}

void SpatialScenario::validate() const {
  pump.validate();
  if (!(pump.kappa > 0.0))
    throw DomainError("SpatialScenario: pump momentum width must be > 0");
  if (filter.is_spectral())
    throw DomainError("SpatialScenario: filter must be spatial");
  filter.validate();
}

double SpatialScenario::kappa_t_equivalent() const {
  if (const auto* g = std::get_if<GaussianSpatial>(&filter.kind)) return g->kappa_t;
  const auto& p = std::get<Pinhole>(filter.kind);
  return pinhole_to_kappa_t(p.radius_rho, p.focal_F, p.lambda_t);
}

TemporalScenario scenario_from_mu(double mu_t, std::optional<double> mu_A) {
  if (!(mu_t >= 0.0)) throw DomainError("mu_t must be >= 0");
  TemporalScenario s;
  s.pump = FieldSpec{.center_omega = 20.0, .sigma_omega = 1.0};
  s.filter.kind = GaussianSpectral{.sigma_t = mu_t};
  s.filter.center_omega = 10.0;
  if (mu_A) {
    if (!(*mu_A >= 0.0)) throw DomainError("mu_A must be >= 0");
    s.alignment = FieldSpec{.center_omega = 10.0, .sigma_omega = *mu_A};
  }
  return s;
}

Grid1D temporal_grid_for(const TemporalScenario& s, std::size_t base_n,
                         QuadRule rule) {
  s.validate();
  const double sp = s.pump.sigma_omega;
  const double st = s.sigma_t();
  std::vector<double> widths = {sp, st, std::sqrt((sp * sp + 2.0 * st * st) / 2.0)};
  if (s.alignment) {
    const double sa = s.alignment->sigma_omega;
    widths.push_back(std::sqrt((sp * sp + sa * sa) / 2.0));
  }
  const double half = auto_span(widths);
  // per axis no kernel feature is narrower than the pump width; |Gamma|^2
  // in the functionals halves that once more
  const double narrowest = sp / std::numbers::sqrt2;
  return make_grid(s.omega_s0(), half, nodes_for(half, narrowest, base_n), rule);
}

Grid2D spatial_grid_for(const SpatialScenario& s, std::size_t n_per_axis) {
  s.validate();
  const double half = auto_span({std::numbers::sqrt2 / s.pump.kappa});
  const double kt = s.kappa_t_equivalent();
  std::size_t n = n_per_axis;
  if (kt > s.pump.kappa) {
    // Narrow filter correlations need proportionally more nodes per axis.
    const double needed = 5.0 * half * kt / std::numbers::sqrt2;
    n = std::max(n, static_cast<std::size_t>(std::ceil(needed)) + 1);
  }
  return make_grid_2d(0.0, 0.0, half, n, QuadRule::trapezoid);
}

CorrMatrix build_cpp_temporal_numeric(const TemporalScenario& s, const Grid1D& grid) {
  s.validate();
  const double sp = s.pump.sigma_omega;
  const double st = s.sigma_t();
  const double w0 = s.omega_s0();
  const double amp2 = sqr(s.pump.amplitude);
  const std::size_t n = grid.size();
  std::vector<Complex> values(n * n);

  if (st == 0.0) {
    // Delta filter: Phi(w,w') = T0 Ep*(w + wt0) Ep(w' + wt0).
    std::vector<double> pump(n);
    for (std::size_t i = 0; i < n; ++i)
      pump[i] = std::exp(-sqr((grid.points[i] - w0) / sp));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        values[i * n + j] = amp2 * s.filter.peak_T0 * pump[i] * pump[j];
  } else {
    const double inner_half = auto_span({sp, st});
    // integrand T(u) Ep(x+u) Ep(x'+u) is a Gaussian of this width wherever
    // its center lands
    const double w_eff = 1.0 / std::sqrt(1.0 / (st * st) + 2.0 / (sp * sp));
    const std::size_t inner_n = nodes_for(inner_half, w_eff, 96, 5.0);
    const Grid1D inner = make_grid(s.filter.center_omega, inner_half, inner_n,
                                   QuadRule::gauss_legendre);

    // pump_fac[i][k] = Ep(w_i + v_k); tw[k] = w_k T(v_k).
    std::vector<double> pump_fac(n * inner_n);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = grid.points[i] - w0;
      for (std::size_t k = 0; k < inner_n; ++k) {
        const double u = inner.points[k] - s.filter.center_omega;
        pump_fac[i * inner_n + k] = std::exp(-sqr((x + u) / sp));
      }
    }
    std::vector<double> tw(inner_n);
    for (std::size_t k = 0; k < inner_n; ++k) {
      const double u = inner.points[k] - s.filter.center_omega;
      tw[k] = inner.weights[k] * s.filter.peak_T0 * std::exp(-sqr(u / st));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        double acc = 0.0;
        const double* pi = &pump_fac[i * inner_n];
        const double* pj = &pump_fac[j * inner_n];
        for (std::size_t k = 0; k < inner_n; ++k) acc += tw[k] * pi[k] * pj[k];
        values[i * n + j] = amp2 * acc;
        values[j * n + i] = amp2 * acc;
      }
    }
  }

  CorrMatrix m(grid, std::move(values), "cpp_temporal_numeric");
  check_diagonal_truncation(m, "build_cpp_temporal_numeric");
  normalize_trace(m);
  return m;
}

CorrMatrix build_cpp_temporal_analytic(const TemporalScenario& s, const Grid1D& grid) {
  s.validate();
  const double sp2 = sqr(s.pump.sigma_omega);
  const double st2 = sqr(s.sigma_t());
  const double w0 = s.omega_s0();
  const double denom = sp2 + 2.0 * st2;
  CorrMatrix m = corr_from_fn(
      grid,
      [&](double w, double wp) {
        const double x = w - w0;
        const double xp = wp - w0;
        return Complex(std::exp(-(x * x + xp * xp) / denom -
                                st2 * sqr(x - xp) / (sp2 * denom)));
      },
      "cpp_temporal_analytic");
  check_diagonal_truncation(m, "build_cpp_temporal_analytic");
  normalize_trace(m);
  return m;
}

CorrMatrix build_dfg_temporal(const TemporalScenario& s, const Grid1D& grid) {
  s.validate();
  if (!s.alignment)
    throw DomainError("build_dfg_temporal: scenario has no alignment beam");
  const double denom = sqr(s.pump.sigma_omega) + sqr(s.alignment->sigma_omega);
  const double w0 = s.omega_s0();
  CorrMatrix m = corr_from_fn(
      grid,
      [&](double w, double wp) {
        const double x = w - w0;
        const double xp = wp - w0;
        return Complex(std::exp(-(x * x + xp * xp) / denom));
      },
      "dfg_temporal");
  normalize_trace(m);
  return m;
}

CorrMatrix build_dfg_temporal_general(const TemporalScenario& s,
                                      const CorrMatrix& gamma_A,
                                      const Grid1D& grid) {
  s.validate();
  const auto* inner = std::get_if<Grid1D>(&gamma_A.grid());
  if (!inner)
    throw ShapeError("build_dfg_temporal_general: alignment correlation must "
                     "live on a 1-d frequency grid");
  const double sp = s.pump.sigma_omega;
  const double w0 = s.omega_s0();
  const std::size_t n = grid.size();
  const std::size_t mS = inner->size();

  std::vector<double> pump_fac(n * mS);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.points[i] - w0;
    for (std::size_t k = 0; k < mS; ++k) {
      const double u = inner->points[k] - s.filter.center_omega;
      pump_fac[i * mS + k] = std::exp(-sqr((x + u) / sp));
    }
  }

  // mid[i][l] = sum_k wk Ep(w_i + vk) conj(Gamma_A[k][l])
  std::vector<Complex> mid(n * mS, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < mS; ++l) {
      Complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < mS; ++k)
        acc += inner->weights[k] * pump_fac[i * mS + k] * std::conj(gamma_A.at(k, l));
      mid[i * mS + l] = acc;
    }

  std::vector<Complex> values(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (std::size_t l = 0; l < mS; ++l)
        acc += inner->weights[l] * mid[i * mS + l] * pump_fac[j * mS + l];
      values[i * n + j] = acc;
    }

  CorrMatrix m(grid, std::move(values), "dfg_temporal_general");
  normalize_trace(m);
  return m;
}

CorrMatrix incoherent_trigger_corr(const TemporalScenario& s, const Grid1D& grid) {
  s.validate();
  const double st = s.sigma_t();
  if (!(st > 0.0))
    throw DomainError("incoherent_trigger_corr: needs a finite filter width");
  const std::size_t n = grid.size();
  std::vector<Complex> values(n * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double u = grid.points[i] - s.filter.center_omega;
    values[i * n + i] =
        s.filter.peak_T0 * std::exp(-sqr(u / st)) / grid.weights[i];
  }
  return CorrMatrix(grid, std::move(values), "incoherent_trigger");
}

CorrMatrix build_advanced_wave_spatial(const FilterSpec& filter, const Grid2D& grid) {
  if (filter.is_spectral())
    throw DomainError("build_advanced_wave_spatial: filter must be spatial");
  filter.validate();
  return corr_from_fn_2d(
      grid,
      [&](double x, double y, double xp, double yp) {
        return Complex(filter_gamma_t(filter, std::hypot(x - xp, y - yp)));
      },
      "advanced_wave_spatial");
}

CorrMatrix build_signal_spatial(const SpatialScenario& s, const Grid2D& grid) {
  s.validate();
  check_spatial_resolution(s, grid);
  const double kp = s.pump.kappa;
  const std::size_t n = grid.size();
  std::vector<double> pump(n);
  for (std::size_t i = 0; i < n; ++i)
    pump[i] = s.pump.amplitude *
              std::exp(-sqr(kp * std::hypot(grid.point_x(i), grid.point_y(i)) / 2.0));

  std::vector<Complex> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = grid.point_x(i), yi = grid.point_y(i);
    for (std::size_t j = i; j < n; ++j) {
      const double sep = std::hypot(xi - grid.point_x(j), yi - grid.point_y(j));
      const double v = pump[i] * pump[j] * filter_gamma_t(s.filter, sep);
      values[i * n + j] = v;
      values[j * n + i] = v;
    }
  }

  CorrMatrix m(grid, std::move(values), "signal_spatial");
  check_diagonal_truncation(m, "build_signal_spatial");
  normalize_trace(m);
  return m;
}

double spatial_purity_streaming(const SpatialScenario& s, const Grid2D& grid) {
  s.validate();
  check_spatial_resolution(s, grid);
  const double kp = s.pump.kappa;
  const std::size_t n = grid.size();
  std::vector<double> pump(n), w(n), px(n), py(n);
  for (std::size_t i = 0; i < n; ++i) {
    px[i] = grid.point_x(i);
    py[i] = grid.point_y(i);
    w[i] = grid.weight(i);
    pump[i] = std::exp(-sqr(kp * std::hypot(px[i], py[i]) / 2.0));
  }

  double tr = 0.0;
  for (std::size_t i = 0; i < n; ++i) tr += w[i] * pump[i] * pump[i];

  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double wi = w[i];
    const double pi2 = pump[i] * pump[i];
    double row = 0.5 * wi * pi2 * pi2;  // j == i term, halved for the doubling below
    for (std::size_t j = i + 1; j < n; ++j) {
      const double g = filter_gamma_t(s.filter, std::hypot(px[i] - px[j], py[i] - py[j]));
      row += w[j] * sqr(pump[i] * pump[j] * g);
    }
    acc += 2.0 * wi * row;
  }
  return acc / (tr * tr);
}

}  // namespace pdcmode
