#include "pdcmode/units.hpp"

#include <cmath>
#include <numbers>

#include "pdcmode/errors.hpp"

namespace pdcmode {

namespace {
const double kTwoSqrt2Ln2 = 2.0 * std::sqrt(2.0 * std::numbers::ln2);  // 2.35482
const double kTwoSqrtLn2 = 2.0 * std::sqrt(std::numbers::ln2);        // 1.66511

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw DomainError(std::string(name) + " must be > 0");
}
}  // namespace

void FieldSpec::validate() const {
  if (!(sigma_omega >= 0.0)) throw DomainError("FieldSpec: sigma_omega must be >= 0");
  if (!(kappa >= 0.0)) throw DomainError("FieldSpec: kappa must be >= 0");
  require_positive(amplitude, "FieldSpec: amplitude");
}

void FilterSpec::validate() const {
  if (const auto* s = std::get_if<GaussianSpectral>(&kind)) {
    if (!(s->sigma_t >= 0.0)) throw DomainError("FilterSpec: sigma_t must be >= 0");
  } else if (const auto* g = std::get_if<GaussianSpatial>(&kind)) {
    if (!(g->kappa_t >= 0.0)) throw DomainError("FilterSpec: kappa_t must be >= 0");
  } else {
    const auto& p = std::get<Pinhole>(kind);
    require_positive(p.radius_rho, "FilterSpec: radius_rho");
    require_positive(p.focal_F, "FilterSpec: focal_F");
    require_positive(p.lambda_t, "FilterSpec: lambda_t");
  }
  require_positive(peak_T0, "FilterSpec: peak_T0");
}

void MuRatios::validate() const {
  if (!(mu_t >= 0.0)) throw DomainError("MuRatios: mu_t must be >= 0");
  if (!(mu_A >= 0.0)) throw DomainError("MuRatios: mu_A must be >= 0");
}

double tau_p_to_sigma_p(double tau_fwhm_s) {
  require_positive(tau_fwhm_s, "tau_fwhm");
  return kTwoSqrt2Ln2 / tau_fwhm_s;
}

double sigma_p_to_tau_p(double sigma_p) {
  require_positive(sigma_p, "sigma_p");
  return kTwoSqrt2Ln2 / sigma_p;
}

double wt_to_sigma_t(double w_fwhm) {
  require_positive(w_fwhm, "w_fwhm");
  return w_fwhm / kTwoSqrtLn2;
}

double sigma_t_to_wt(double sigma_t) {
  require_positive(sigma_t, "sigma_t");
  return sigma_t * kTwoSqrtLn2;
}

double dp_to_kappa_p(double d_fwhm_m) {
  require_positive(d_fwhm_m, "d_fwhm");
  return kTwoSqrt2Ln2 / d_fwhm_m;
}

double kappa_p_to_dp(double kappa_p) {
  require_positive(kappa_p, "kappa_p");
  return kTwoSqrt2Ln2 / kappa_p;
}

double pinhole_to_kappa_t(double rho_m, double focal_m, double lambda_m) {
  require_positive(rho_m, "rho");
  require_positive(focal_m, "focal_F");
  require_positive(lambda_m, "lambda_t");
  const double k_t = 2.0 * std::numbers::pi / lambda_m;
  return k_t * rho_m / (focal_m * std::numbers::sqrt2);
}

double dlambda_to_w(double dlambda_m, double lambda_m) {
  require_positive(dlambda_m, "dlambda");
  require_positive(lambda_m, "lambda");
  return 2.0 * std::numbers::pi * kSpeedOfLight * dlambda_m / (lambda_m * lambda_m);
}

}  // namespace pdcmode
