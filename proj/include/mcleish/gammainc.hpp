#pragma once

namespace mcleish {

// Regularized lower/upper incomplete gamma functions P(a,x), Q(a,x)
// (series for x < a+1, continued fraction otherwise).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// CDF helpers for a Gamma(shape, mean 1) mixing variable G:
// Pr{G <= g} and Pr{G > g}.
double gamma_mean1_cdf(double shape, double g);
double gamma_mean1_sf(double shape, double g);

}  // namespace mcleish
