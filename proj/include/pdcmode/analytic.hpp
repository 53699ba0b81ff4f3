#pragma once

namespace pdcmode {

// Closed-form scalar results for the heralded-photon mode, used both for
// direct evaluation and as oracles against the quadrature kernels.

// Temporal purity of the heralded mode: 1 / sqrt(1 + 2 mu_t^2).
double p_temp(double mu_t);

// Small-mu_t approximation of p_temp in lab units:
// 1 - w_t^2 tau_p^2 / (32 ln^2 2).  Throws NumericError when the result
// would be <= 0 (outside the tight-filtering regime).
double p_temp_fwhm(double w_t, double tau_p);

// Temporal mode matching between the heralded mode and the
// difference-frequency wave from a Gaussian alignment beam:
// sqrt( (1 + mu_A^2) / ((1 + mu_A^2/2 + mu_t^2)(1 + mu_A^2/2)) ).
double m_temp(double mu_t, double mu_A);

// Alignment width maximizing m_temp at fixed mu_t:
// sqrt( sqrt(1 + 2 mu_t^2) - 1 ).
double mu_A_max(double mu_t);

// Spatial purity for a Gaussian spatial filter: 1 / (1 + 2 kappa_t^2 / kappa_p^2).
double p_sp_gaussian(double kappa_t, double kappa_p);

// Tight-filtering spatial purity for a top-hat pinhole:
// 1 - (pi rho d_p / (sqrt(2 ln 2) lambda_t F))^2.  Throws NumericError when
// the result would be <= 0.
double p_sp_pinhole(double rho, double d_p, double lambda_t, double F);

// Overlap penalty between two Gaussian pulses whose widths differ by a
// factor alpha: f(alpha) = 2 alpha / (alpha^2 + 1).  f(alpha) == f(1/alpha).
double f_alpha(double alpha);

// First-order Bessel function of the first kind, absolute error <= 1e-10.
// Ascending series for |x| <= 16, Hankel asymptotic expansion beyond.
double bessel_j1(double x);

// 2 J1(x) / x, continuous through x = 0 where it equals 1.
double jinc(double x);

}  // namespace pdcmode
