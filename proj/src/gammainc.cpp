#include "mcleish/gammainc.hpp"

#include <cmath>
#include <stdexcept>

namespace mcleish {

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 10000;

double p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * kEps)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_p: series stalled");
}

double q_contfrac(double a, double x) {
    constexpr double kTiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_q: continued fraction stalled");
}

}  // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0 || !std::isfinite(a) || !std::isfinite(x))
        throw std::domain_error("gamma_p: requires a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    return (x < a + 1.0) ? p_series(a, x) : 1.0 - q_contfrac(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0 || !std::isfinite(a) || !std::isfinite(x))
        throw std::domain_error("gamma_q: requires a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    return (x < a + 1.0) ? 1.0 - p_series(a, x) : q_contfrac(a, x);
}

double gamma_mean1_cdf(double shape, double g) {
    if (g <= 0.0) return 0.0;
    return gamma_p(shape, shape * g);
}

double gamma_mean1_sf(double shape, double g) {
    if (g <= 0.0) return 1.0;
    return gamma_q(shape, shape * g);
}

}  // namespace mcleish
