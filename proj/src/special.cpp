#include "mcleish/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mcleish/bessel.hpp"
#include "mcleish/gammainc.hpp"

namespace mcleish {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kSqrt2 = 1.414213562373095048801688724209698;

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

// log of the angular integrand factor m(t) = 2^{1-nu} t^nu K_nu(t) / Gamma(nu).
// m equals E[exp(-t^2/(4 nu G))] and lies in (0, 1].
double log_angular_factor(double nu, double t) {
    return (1.0 - nu) * std::log(2.0) + nu * std::log(t) - std::lgamma(nu) +
           log_bessel_k(nu, t);
}

// Angular integral of Definition-1's integrand over [0, phi].
double angular_integral(double nu, double x, double phi,
                        const QuadratureConfig& cfg) {
    const double lam0 = std::sqrt(2.0 / nu);
    const double min_log = std::log(std::numeric_limits<double>::min()) + 40.0;
    auto integrand = [&](double theta) {
        const double s = std::sin(theta);
        if (s <= 0.0) return 0.0;
        const double t = 2.0 * x / (lam0 * s);
        const double lg = log_angular_factor(nu, t);
        if (lg < min_log) return 0.0;
        return std::exp(lg) / kPi;
    };
    // The integrand switches on over a theta-scale ~ x near the sin(theta)
    // zeros; seed break points there so the subdivision starts refined.
    std::vector<double> breaks;
    for (double scale : {0.5, 1.0, 2.0, 8.0, 32.0}) {
        const double edge = scale * x;
        breaks.push_back(edge);
        breaks.push_back(kPi - edge);  // mirror near theta = pi
    }
    breaks.push_back(0.5 * phi);
    breaks.push_back(kPi / 2.0);
    return integrate_segmented(integrand, 0.0, phi, breaks.data(),
                               static_cast<int>(breaks.size()), cfg);
}

// Truncation bracket [g_lo, g_hi] with Gamma(nu, mean 1) mass outside
// below `tail_mass` on each side.
void gamma_bracket(double nu, double tail_mass, double& g_lo, double& g_hi) {
    g_lo = std::max(1e-290, std::exp(
        (std::lgamma(nu + 1.0) + std::log(tail_mass)) / nu) / nu);
    if (gamma_mean1_cdf(nu, g_lo) > tail_mass) {
        while (g_lo > 1e-290 && gamma_mean1_cdf(nu, g_lo) > tail_mass)
            g_lo *= 0.25;
    }
    g_hi = std::max(4.0, 1.0 + 40.0 / std::sqrt(nu));
    while (gamma_mean1_sf(nu, g_hi) > tail_mass && g_hi < 1e12) g_hi *= 1.5;
}

double check_clamp(double p, const QuadratureConfig& cfg, const char* what) {
    const double slack = 10.0 * std::max(cfg.abs_tol, 1e-12);
    if (p < -slack || p > 1.0 + slack)
        throw quadrature_error(std::string(what) +
                                   ": probability outside [0,1] beyond "
                                   "tolerance",
                               std::max(-p, p - 1.0));
    return clamp01(p);
}

}  // namespace

Normality::Normality(double v) : nu(v) {
    if (std::isnan(v) || v <= 0.0)
        throw std::domain_error("Normality: nu must be > 0");
}

bool Normality::is_gaussian_limit() const noexcept {
    return nu >= kGaussianLimitNu;
}

double gaussian_q(double x) {
    if (std::isnan(x)) throw std::domain_error("gaussian_q: NaN argument");
    return 0.5 * std::erfc(x / kSqrt2);
}

double laplacian_q(double x) {
    if (std::isnan(x)) throw std::domain_error("laplacian_q: NaN argument");
    if (x < 0.0) return 1.0 - laplacian_q(-x);
    return 0.5 * std::exp(-kSqrt2 * x);
}

double mcleish_q(Normality nu, double x, const QuadratureConfig& cfg) {
    return mcleish_q_partial(nu, x, kPi / 2.0, cfg);
}

double mcleish_q_partial(Normality nu, double x, double phi,
                         const QuadratureConfig& cfg) {
    if (std::isnan(x)) throw std::domain_error("mcleish_q: NaN argument");
    if (phi < 0.0 || phi > kPi + 1e-12)
        throw std::domain_error("mcleish_q_partial: phi outside [0, pi]");
    if (nu.is_gaussian_limit()) {
        // Craig-form angular integral of the Gaussian kernel.
        if (x < 0.0) return 1.0 - mcleish_q_partial(nu, -x, phi, cfg);
        if (x == 0.0) return phi / kPi;
        auto integrand = [&](double theta) {
            const double s = std::sin(theta);
            if (s <= 0.0) return 0.0;
            const double e = -x * x / (2.0 * s * s);
            return (e < -700.0) ? 0.0 : std::exp(e) / kPi;
        };
        const double breaks[] = {x, 2.0 * x, kPi - x, kPi - 2.0 * x,
                                 kPi / 2.0};
        return clamp01(
            integrate_segmented(integrand, 0.0, phi, breaks, 5, cfg));
    }
    if (x < 0.0) return 1.0 - mcleish_q_partial(nu, -x, phi, cfg);
    if (phi == 0.0) return 0.0;
    if (x == 0.0) return phi / kPi;
    return check_clamp(angular_integral(nu.nu, x, phi, cfg), cfg,
                       "mcleish_q_partial");
}

QBounds mcleish_q_bounds(Normality nu, double x) {
    if (!(x > 0.0)) throw std::domain_error("mcleish_q_bounds: requires x > 0");
    if (nu.is_gaussian_limit())
        return {gaussian_q(x), gaussian_q(x)};
    const double n = nu.nu;
    const double lam0 = std::sqrt(2.0 / n);
    const double log_pref = -0.5 * std::log(kPi) - std::lgamma(n) +
                            (n - 0.5) * std::log(x / lam0);
    const double arg = 2.0 * x / lam0;
    const double upper = std::exp(log_pref + log_bessel_k(n + 0.5, arg));
    const double gap = mcleish_q_bounds_gap(nu, x);
    const double lower = upper - gap;
    return {clamp01(std::min(lower, upper)), clamp01(upper)};
}

double mcleish_q_bounds_gap(Normality nu, double x) {
    if (!(x > 0.0))
        throw std::domain_error("mcleish_q_bounds_gap: requires x > 0");
    if (nu.is_gaussian_limit()) return 0.0;
    const double n = nu.nu;
    const double lam0 = std::sqrt(2.0 / n);
    const double log_gap = -std::log(2.0) - 0.5 * std::log(kPi) -
                           std::lgamma(n) +
                           (n - 1.5) * std::log(x / lam0) +
                           log_bessel_k(n + 1.5, 2.0 * x / lam0);
    return std::exp(log_gap);
}

double bivariate_gaussian_q(double x, double y, double rho) {
    if (!(std::abs(rho) < 1.0))
        throw std::domain_error("bivariate_gaussian_q: requires |rho| < 1");
    const double base = gaussian_q(x) * gaussian_q(y);
    if (rho == 0.0) return base;
    // dPr{X>x,Y>y}/drho equals the bivariate density (Plackett's identity);
    // integrate it from independence to rho.
    auto density = [&](double r) {
        const double omr2 = 1.0 - r * r;
        const double e = -(x * x - 2.0 * r * x * y + y * y) / (2.0 * omr2);
        if (e < -700.0) return 0.0;
        return std::exp(e) / (2.0 * kPi * std::sqrt(omr2));
    };
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-12;
    const double lo = std::min(0.0, rho);
    const double hi = std::max(0.0, rho);
    const double corr = integrate(density, lo, hi, cfg);
    return clamp01(base + (rho > 0.0 ? corr : -corr));
}

double gamma_mixture(Normality nu, const std::function<double(double)>& h,
                     const QuadratureConfig& cfg) {
    if (nu.is_gaussian_limit()) return h(1.0);
    const double n = nu.nu;
    const double tail = 0.1 * std::max(cfg.abs_tol, 1e-14);
    double g_lo, g_hi;
    gamma_bracket(n, tail, g_lo, g_hi);
    // Substitute g = e^u: absorbs the g^{nu-1} endpoint for nu < 1 and makes
    // both tails decay exponentially in u.
    const double log_norm = n * std::log(n) - std::lgamma(n);
    auto integrand = [&](double u) {
        const double g = std::exp(u);
        const double lw = log_norm + n * u - n * g;
        if (lw < -740.0) return 0.0;
        return std::exp(lw) * h(g);
    };
    const double u_lo = std::log(g_lo), u_hi = std::log(g_hi);
    const double breaks[] = {0.0, -1.0, 1.0, -4.0, 4.0};
    return integrate_segmented(integrand, u_lo, u_hi, breaks, 5, cfg);
}

double mcleish_q_bivariate(Normality nu, double x, double y, double rho,
                           const QuadratureConfig& cfg) {
    if (!(std::abs(rho) < 1.0))
        throw std::domain_error("mcleish_q_bivariate: requires |rho| < 1");
    if (std::isnan(x) || std::isnan(y))
        throw std::domain_error("mcleish_q_bivariate: NaN argument");
    if (nu.is_gaussian_limit()) return bivariate_gaussian_q(x, y, rho);
    auto h = [&](double g) {
        const double rs = 1.0 / std::sqrt(g);
        return bivariate_gaussian_q(x * rs, y * rs, rho);
    };
    return check_clamp(gamma_mixture(nu, h, cfg), cfg, "mcleish_q_bivariate");
}

double mcleish_q_multivariate(Normality nu, std::span<const double> x,
                              const QuadratureConfig& cfg) {
    if (x.empty())
        throw std::domain_error("mcleish_q_multivariate: empty argument");
    for (double v : x)
        if (std::isnan(v))
            throw std::domain_error("mcleish_q_multivariate: NaN entry");
    auto product = [&](double g) {
        const double rs = 1.0 / std::sqrt(g);
        double p = 1.0;
        for (double v : x) p *= gaussian_q(v * rs);
        return p;
    };
    if (nu.is_gaussian_limit()) return clamp01(product(1.0));
    return check_clamp(gamma_mixture(nu, product, cfg), cfg,
                       "mcleish_q_multivariate");
}

double mcleish_q_multivariate_lower(Normality nu, std::span<const double> x,
                                    const QuadratureConfig& cfg) {
    if (x.empty())
        throw std::domain_error("mcleish_q_multivariate_lower: empty argument");
    auto product = [&](double g) {
        const double rs = 1.0 / std::sqrt(g);
        double p = 1.0;
        for (double v : x) p *= 1.0 - gaussian_q(v * rs);
        return p;
    };
    if (nu.is_gaussian_limit()) return clamp01(product(1.0));
    return check_clamp(gamma_mixture(nu, product, cfg), cfg,
                       "mcleish_q_multivariate_lower");
}

double reciprocal_gamma_mgf(Normality nu, double s) {
    if (!(s >= 0.0))
        throw std::domain_error("reciprocal_gamma_mgf: requires s >= 0");
    if (s == 0.0) return 1.0;
    if (nu.is_gaussian_limit()) return std::exp(-s);
    const double n = nu.nu;
    const double lg = std::log(2.0) - std::lgamma(n) +
                      0.5 * n * std::log(n * s) +
                      log_bessel_k(n, 2.0 * std::sqrt(n * s));
    if (lg < std::log(std::numeric_limits<double>::min()) + 2.0) return 0.0;
    return std::min(1.0, std::exp(lg));
}

}  // namespace mcleish
