#include "pdcmode/analytic.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "pdcmode/errors.hpp"

namespace pdcmode {

namespace {

void require_nonneg(double v, const char* name) {
  if (!(v >= 0.0)) throw DomainError(std::string(name) + " must be >= 0");
}

// Hankel expansion coefficients a_m for nu = 1:
// a_0 = 1, a_m = a_{m-1} (4 - (2m-1)^2) / (8m).
constexpr std::size_t kHankelTerms = 14;
constexpr std::array<double, kHankelTerms> kHankelA = [] {
  std::array<double, kHankelTerms> a{};
  a[0] = 1.0;
  for (std::size_t m = 1; m < kHankelTerms; ++m) {
    const double odd = 2.0 * static_cast<double>(m) - 1.0;
    a[m] = a[m - 1] * (4.0 - odd * odd) / (8.0 * static_cast<double>(m));
  }
  return a;
}();

// Ascending power series, adequate to ~1e-11 absolute for |x| <= 16.
double j1_series(double x) {
  const double q = -0.25 * x * x;
  double term = 0.5 * x;
  double sum = term;
  for (int m = 1; m < 200; ++m) {
    term *= q / (static_cast<double>(m) * (m + 1.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
  }
  return sum;
}

// Hankel asymptotic form for |x| > 16, truncation error < 1e-11 there.
double j1_asymptotic(double x) {
  const double inv2 = 1.0 / (x * x);
  double p = 0.0;
  double q = 0.0;
  double xpow = 1.0;
  for (std::size_t k = 0; 2 * k + 1 < kHankelTerms; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    p += sign * kHankelA[2 * k] * xpow;
    q += sign * kHankelA[2 * k + 1] * xpow / x;
    xpow *= inv2;
  }
  const double chi = x - 0.75 * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) *
         (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double p_temp(double mu_t) {
  require_nonneg(mu_t, "mu_t");
  return 1.0 / std::sqrt(1.0 + 2.0 * mu_t * mu_t);
}

double p_temp_fwhm(double w_t, double tau_p) {
  require_nonneg(w_t, "w_t");
  require_nonneg(tau_p, "tau_p");
  const double ln2 = std::numbers::ln2;
  const double wt = w_t * tau_p;
  const double value = 1.0 - wt * wt / (32.0 * ln2 * ln2);
  if (!(value > 0.0))
    throw NumericError("p_temp_fwhm: w_t * tau_p outside the tight-filtering regime");
  return value;
}

double m_temp(double mu_t, double mu_A) {
  require_nonneg(mu_t, "mu_t");
  require_nonneg(mu_A, "mu_A");
  const double a2 = mu_A * mu_A;
  return std::sqrt((1.0 + a2) /
                   ((1.0 + 0.5 * a2 + mu_t * mu_t) * (1.0 + 0.5 * a2)));
}

double mu_A_max(double mu_t) {
  require_nonneg(mu_t, "mu_t");
  return std::sqrt(std::sqrt(1.0 + 2.0 * mu_t * mu_t) - 1.0);
}

double p_sp_gaussian(double kappa_t, double kappa_p) {
  require_nonneg(kappa_t, "kappa_t");
  if (!(kappa_p > 0.0)) throw DomainError("kappa_p must be > 0");
  const double r = kappa_t / kappa_p;
  return 1.0 / (1.0 + 2.0 * r * r);
}

double p_sp_pinhole(double rho, double d_p, double lambda_t, double F) {
  require_nonneg(rho, "rho");
  require_nonneg(d_p, "d_p");
  if (!(lambda_t > 0.0)) throw DomainError("lambda_t must be > 0");
  if (!(F > 0.0)) throw DomainError("F must be > 0");
  const double ratio = std::numbers::pi * rho * d_p /
                       (std::sqrt(2.0 * std::numbers::ln2) * lambda_t * F);
  const double value = 1.0 - ratio * ratio;
  if (!(value > 0.0))
    throw NumericError("p_sp_pinhole: pinhole outside the tight-filtering regime");
  return value;
}

double f_alpha(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be > 0");
  return 2.0 * alpha / (alpha * alpha + 1.0);
}

double bessel_j1(double x) {
  if (!std::isfinite(x)) throw DomainError("bessel_j1: non-finite argument");
  const double ax = std::abs(x);
  const double j = (ax <= 16.0) ? j1_series(ax) : j1_asymptotic(ax);
  return x < 0.0 ? -j : j;  // J1 is odd
}

double jinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 8.0 + x2 * x2 / 192.0;
  }
  return 2.0 * bessel_j1(x) / x;
}

}  // namespace pdcmode
