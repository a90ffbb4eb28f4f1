#pragma once

#include <span>

#include "mcleish/quadrature.hpp"

namespace mcleish {

// Normality parameter of the McLeish family. Values at or above
// kGaussianLimitNu (or +infinity) are treated as the Gaussian limit:
// the mixture quadratures degenerate there, while the limit laws are exact.
struct Normality {
    double nu;

    explicit Normality(double v);
    bool is_gaussian_limit() const noexcept;
};

inline constexpr double kGaussianLimitNu = 1e6;

// Standard Gaussian tail probability Q(x) = Pr{N(0,1) > x}.
double gaussian_q(double x);

// Tail probability of the unit-variance Laplace law,
// LQ(x) = exp(-sqrt(2) x)/2 for x >= 0, with LQ(-x) = 1 - LQ(x).
// This is the nu = 1 member of the McLeish Q family.
double laplacian_q(double x);

// Tail probability Q_nu(x) of the standard (zero-mean, unit-variance)
// McLeish law, evaluated by adaptive quadrature of the angular integral
//   Q_nu(x) = (2^{1-nu}/(pi Gamma(nu))) *
//             Int_0^{pi/2} t^nu K_nu(t) dtheta,  t = 2x/(lambda0 sin theta)
// for x >= 0, with the reflection Q_nu(-x) = 1 - Q_nu(x).
double mcleish_q(Normality nu, double x, const QuadratureConfig& cfg = {});

// Angular integral truncated at phi in [0, pi] (phi beyond pi/2 keeps the
// same integrand; M-ary SER formulas need angles up to pi - pi/M).
double mcleish_q_partial(Normality nu, double x, double phi,
                         const QuadratureConfig& cfg = {});

struct QBounds {
    double lower;
    double upper;
};

// Closed-form lower/upper bounds of Q_nu(x) for x > 0, and their gap
//   upper - lower = (1/(2 sqrt(pi) Gamma(nu))) (x/lambda0)^{nu-3/2}
//                   K_{nu+3/2}(2x/lambda0).
QBounds mcleish_q_bounds(Normality nu, double x);
double mcleish_q_bounds_gap(Normality nu, double x);

// Joint tail Pr{X > x, Y > y} of the standard bivariate Gaussian with
// correlation rho (Plackett quadrature over the correlation parameter).
double bivariate_gaussian_q(double x, double y, double rho);

// Joint tail of a standard correlated McLeish pair (unit per-component
// variance, inphase/quadrature correlation rho), computed as the
// Gamma(nu, mean 1) mixture of bivariate Gaussian tails.
double mcleish_q_bivariate(Normality nu, double x, double y, double rho,
                           const QuadratureConfig& cfg = {});

// Joint tail Pr{S_1 > x_1, ..., S_L > x_L} of the standard multivariate
// McLeish law: conditioned on the mixing variable the components are
// independent Gaussians, so this is a 1-D Gamma mixture of tail products.
double mcleish_q_multivariate(Normality nu, std::span<const double> x,
                              const QuadratureConfig& cfg = {});

// Companion orthant probability Pr{S_1 <= x_1, ..., S_L <= x_L}.
double mcleish_q_multivariate_lower(Normality nu, std::span<const double> x,
                                    const QuadratureConfig& cfg = {});

// Reciprocal-Gamma MGF  E[exp(-s/G)], G ~ Gamma(nu, mean 1):
//   (2/Gamma(nu)) (nu s)^{nu/2} K_nu(2 sqrt(nu s)).
// The non-coherent SER family is built from this transform.
double reciprocal_gamma_mgf(Normality nu, double s);

// Gamma(nu, mean 1) mixture of an arbitrary bounded kernel h(g); exposed for
// the mixture-based laws (truncation bounds from the Gamma tail itself).
double gamma_mixture(Normality nu, const std::function<double(double)>& h,
                     const QuadratureConfig& cfg = {});

}  // namespace mcleish
