#include "mcleish/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mcleish {

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 20000;
constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kLargeOrderSwitch = 100.0;

// Power series for 1/Gamma(1+x), |x| <= 1 (Abramowitz & Stegun 6.1.34).
constexpr double kInvGammaCoef[26] = {
    1.0000000000000000e+00,  5.7721566490153286e-01, -6.5587807152025388e-01,
    -4.2002635034095236e-02, 1.6653861138229149e-01, -4.2197734555544337e-02,
    -9.6219715278769736e-03, 7.2189432466630995e-03, -1.1651675918590651e-03,
    -2.1524167411495097e-04, 1.2805028238811619e-04, -2.0134854780788239e-05,
    -1.2504934821426707e-06, 1.1330272319816959e-06, -2.0563384169776071e-07,
    6.1160951044814158e-09,  5.0020076444692229e-09, -1.1812745704870201e-09,
    1.0434267116911005e-10,  7.7822634399050712e-12, -3.6968056186422057e-12,
    5.1003702874544760e-13,  -2.0583260535665068e-14, -5.3481225394230180e-16,
    1.2267786282382608e-16,  -1.1812593016974588e-17};

// 1/Gamma(1+x) for |x| <= 0.5.
double inv_gamma1p(double x) {
    double p = 0.0;
    for (int k = 25; k >= 0; --k) p = p * x + kInvGammaCoef[k];
    return p;
}

// gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu) and
// gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2, computed from the even/odd
// parts of the series so mu -> 0 needs no special case.
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl,
                  double& gammi) {
    const double mu2 = mu * mu;
    double odd = 0.0, even = 0.0;
    for (int k = 25; k >= 1; k -= 2) odd = odd * mu2 + kInvGammaCoef[k];
    for (int k = 24; k >= 0; k -= 2) even = even * mu2 + kInvGammaCoef[k];
    gam1 = -odd;
    gam2 = even;
    gampl = gam2 - mu * gam1;  // 1/Gamma(1+mu)
    gammi = gam2 + mu * gam1;  // 1/Gamma(1-mu)
}

struct KPair {
    double kmu;    // K_mu(x)   (or e^x K_mu for the scaled branch)
    double kmu1;   // K_{mu+1}(x)
    bool scaled;   // true when values carry the e^x factor
};

// Temme's series, valid for x <= 2, |mu| <= 1/2 (cf. Temme, J. Comput.
// Phys. 19 (1975); same scheme as the classic bessik routine).
KPair k_temme(double mu, double x) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact =
        (std::abs(pimu) < kEps) ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = (std::abs(e) < kEps) ? 1.0 : std::sinh(e) / e;
    double gam1, gam2, gampl, gammi;
    temme_gammas(mu, gam1, gam2, gampl, gammi);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    const double mu2 = mu * mu;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
        ff = (i * ff + p + q) / (i * i - mu2);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        const double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    if (i > kMaxIter) throw std::runtime_error("bessel_k: series stalled");
    return {sum, sum1 * 2.0 / x, false};
}

// Steed's continued fraction CF2 for x > 2 (Thompson & Barnett scheme);
// returns the scaled pair e^x K_mu, e^x K_{mu+1}.
KPair k_steed(double mu, double x) {
    const double mu2 = mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= kMaxIter; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    if (i > kMaxIter)
        throw std::runtime_error("bessel_k: continued fraction stalled");
    h = a1 * h;
    const double kmu = std::sqrt(kPi / (2.0 * x)) / s;  // e^x K_mu
    const double kmu1 = kmu * (mu + x + 0.5 - h) / x;
    return {kmu, kmu1, true};
}

// Coefficients u_k(t) of the uniform large-order expansion
// (Abramowitz & Stegun 9.3.9-9.3.14).
double debye_u(int k, double t) {
    const double t2 = t * t;
    switch (k) {
        case 0:
            return 1.0;
        case 1:
            return t * (3.0 - 5.0 * t2) / 24.0;
        case 2:
            return t2 * (81.0 + t2 * (-462.0 + t2 * 385.0)) / 1152.0;
        case 3:
            return t * t2 *
                   (30375.0 +
                    t2 * (-369603.0 + t2 * (765765.0 - t2 * 425425.0))) /
                   414720.0;
        case 4:
            return t2 * t2 *
                   (4465125.0 +
                    t2 * (-94121676.0 +
                          t2 * (349922430.0 +
                                t2 * (-446185740.0 + t2 * 185910725.0)))) /
                   39813120.0;
        case 5:
            return t * t2 * t2 *
                   (1519035525.0 +
                    t2 * (-49286948607.0 +
                          t2 * (284499769554.0 +
                                t2 * (-614135872350.0 +
                                      t2 * (566098157625.0 -
                                            t2 * 188699385875.0))))) /
                   6688604160.0;
        default:
            return 0.0;
    }
}

// log K_nu(nu z) by the uniform asymptotic expansion, nu large.
double log_k_uniform(double nu, double x) {
    const double z = x / nu;
    const double root = std::sqrt(1.0 + z * z);
    const double eta = root + std::log(z / (1.0 + root));
    const double t = 1.0 / root;
    double series = 0.0, sign = 1.0, nup = 1.0;
    for (int k = 0; k <= 5; ++k) {
        series += sign * debye_u(k, t) / nup;
        sign = -sign;
        nup *= nu;
    }
    return 0.5 * std::log(kPi / (2.0 * nu)) - nu * eta -
           0.25 * std::log1p(z * z) + std::log(series);
}

void check_args(double order, double x) {
    if (!std::isfinite(order) || !std::isfinite(x))
        throw std::domain_error("bessel_k: non-finite argument");
    if (x <= 0.0) throw std::domain_error("bessel_k: requires x > 0");
}

// Two-term small-argument form in log space; needed below x ~ 1e-180 where
// the Temme seed pair K_mu, K_{mu+1} itself exceeds the double range.
double log_k_tiny_x(double nu, double x) {
    constexpr double kEuler = 0.57721566490153286;
    if (nu < 1e-10) return std::log(-std::log(0.5 * x) - kEuler);
    const double log_half_x = std::log(0.5 * x);
    double corr = 0.0;
    const double e = 2.0 * nu * log_half_x;
    if (e > -700.0)
        corr = std::log1p(-std::exp(e) * std::exp(std::lgamma(1.0 - nu) -
                                                  std::lgamma(1.0 + nu)));
    return std::lgamma(nu) - std::log(2.0) - nu * log_half_x + corr;
}

// Computes log K_nu(x) together with recurrence from the fractional-order
// seed pair, renormalizing to dodge overflow on the way up.
double log_k_impl(double nu, double x) {
    nu = std::abs(nu);  // K_{-nu} = K_nu
    if (nu >= kLargeOrderSwitch) return log_k_uniform(nu, x);
    if (x < 1e-180) return log_k_tiny_x(nu, x);
    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl;
    KPair p = (x <= 2.0) ? k_temme(mu, x) : k_steed(mu, x);
    double offset = p.scaled ? -x : 0.0;
    double kmu = p.kmu, kmu1 = p.kmu1;
    for (int i = 1; i <= nl; ++i) {
        const double knext = (mu + i) * (2.0 / x) * kmu1 + kmu;
        kmu = kmu1;
        kmu1 = knext;
        if (kmu1 > 1e280) {
            kmu *= 1e-280;
            kmu1 *= 1e-280;
            offset += std::log(1e280);
        }
    }
    return std::log(kmu) + offset;
}

}  // namespace

double bessel_k(double order, double x) {
    check_args(order, x);
    const double lk = log_k_impl(order, x);
    if (lk < std::log(std::numeric_limits<double>::min()) + 2.0) return 0.0;
    return std::exp(lk);
}

double bessel_k_scaled(double order, double x) {
    check_args(order, x);
    return std::exp(log_k_impl(order, x) + x);
}

double log_bessel_k(double order, double x) {
    check_args(order, x);
    return log_k_impl(order, x);
}

double bessel_i0(double x) {
    return bessel_i0_scaled(x) * std::exp(std::abs(x));
}

// Polynomial fits from Abramowitz & Stegun 9.8.1-9.8.2.
double bessel_i0_scaled(double x) {
    const double ax = std::abs(x);
    if (ax < 3.75) {
        const double t = (x / 3.75) * (x / 3.75);
        const double p =
            1.0 +
            t * (3.5156229 +
                 t * (3.0899424 +
                      t * (1.2067492 +
                           t * (0.2659732 + t * (0.0360768 + t * 0.0045813)))));
        return p * std::exp(-ax);
    }
    const double t = 3.75 / ax;
    const double p =
        0.39894228 +
        t * (0.01328592 +
             t * (0.00225319 +
                  t * (-0.00157565 +
                       t * (0.00916281 +
                            t * (-0.02057706 +
                                 t * (0.02635537 +
                                      t * (-0.01647633 + t * 0.00392377)))))));
    return p / std::sqrt(ax);
}

}  // namespace mcleish
