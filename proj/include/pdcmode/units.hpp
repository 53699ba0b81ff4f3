#pragma once

#include <optional>
#include <variant>

namespace pdcmode {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// A collimated Gaussian field E(k,w) = amplitude * exp(-k^2/kappa^2
// - (w - center_omega)^2 / sigma_omega^2).  sigma_omega = 0 encodes a
// monochromatic (plane-wave-in-time) field, kappa = 0 a spatial plane wave.
struct FieldSpec {
  double center_omega = 0.0;  // rad/s
  double sigma_omega = 0.0;   // rad/s, >= 0
  double kappa = 0.0;         // 1/m, >= 0
  double amplitude = 1.0;     // dimensionless, > 0

  void validate() const;
};

// Trigger filter transmission.  Spectral and spatial Gaussian widths follow
// the same field-amplitude convention as FieldSpec; the pinhole is a top-hat
// of radius `radius_rho` in the focal plane of a lens of focal length
// `focal_F`, at trigger wavelength `lambda_t`.
struct GaussianSpectral {
  double sigma_t = 0.0;  // rad/s, >= 0 (0 = delta filter)
};
struct GaussianSpatial {
  double kappa_t = 0.0;  // 1/m, >= 0 (0 = no spatial filtering)
};
struct Pinhole {
  double radius_rho = 0.0;  // m, > 0
  double focal_F = 0.0;     // m, > 0
  double lambda_t = 0.0;    // m, > 0
};

struct FilterSpec {
  std::variant<GaussianSpectral, GaussianSpatial, Pinhole> kind;
  double center_omega = 0.0;  // rad/s, spectral kinds only
  double peak_T0 = 1.0;       // dimensionless, > 0

  void validate() const;
  bool is_spectral() const { return std::holds_alternative<GaussianSpectral>(kind); }
  bool is_gaussian_spatial() const { return std::holds_alternative<GaussianSpatial>(kind); }
  bool is_pinhole() const { return std::holds_alternative<Pinhole>(kind); }
};

// Filter and alignment widths in units of the pump width.
struct MuRatios {
  double mu_t = 0.0;  // sigma_t / sigma_p
  double mu_A = 0.0;  // sigma_A / sigma_p

  void validate() const;
};

// FWHM <-> Gaussian-width conversions, field-amplitude convention.
// All four are strictly monotone and invertible; each pair round-trips to
// better than 1e-12 relative.

// Pump pulse: full temporal width at half intensity maximum tau_p
// corresponds to sigma_p = 2 sqrt(2 ln 2) / tau_p.
double tau_p_to_sigma_p(double tau_fwhm_s);
double sigma_p_to_tau_p(double sigma_p);

// Spectral filter: transmission FWHM w_t = 2 sqrt(ln 2) sigma_t.
double wt_to_sigma_t(double w_fwhm);
double sigma_t_to_wt(double sigma_t);

// Pump beam: FWHM intensity diameter d_p gives kappa_p = 2 sqrt(2 ln 2) / d_p.
double dp_to_kappa_p(double d_fwhm_m);
double kappa_p_to_dp(double kappa_p);

// Top-hat pinhole equivalent Gaussian width: kappa_t = k_t rho / (F sqrt 2),
// k_t = 2 pi / lambda_t.  Matches the pinhole correlation on small scales.
double pinhole_to_kappa_t(double rho_m, double focal_m, double lambda_m);

// Filter FWHM in wavelength (delta-lambda at lambda) to angular frequency
// FWHM: w = 2 pi c dlambda / lambda^2.
double dlambda_to_w(double dlambda_m, double lambda_m);

}  // namespace pdcmode
