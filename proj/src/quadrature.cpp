#include "mcleish/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace mcleish {

namespace {

// 15-point Kronrod nodes with the embedded 7-point Gauss rule.
// Abscissae/weights from the QUADPACK dqk15 tables.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

Interval evaluate(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double result_gauss = fc * kWg[3];
    double result_kronrod = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double f1 = f(c - x);
        const double f2 = f(c + x);
        result_kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
    }
    Interval out;
    out.a = a;
    out.b = b;
    out.value = result_kronrod * h;
    out.error = std::abs((result_kronrod - result_gauss) * h);
    return out;
}

double run(const std::function<double(double)>& f,
           const std::vector<double>& edges, const QuadratureConfig& cfg) {
    std::priority_queue<Interval> heap;
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Interval iv = evaluate(f, edges[i], edges[i + 1]);
        total += iv.value;
        total_err += iv.error;
        heap.push(iv);
    }
    int splits = 0;
    while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        if (splits >= cfg.max_subdivisions || heap.empty())
            throw quadrature_error("adaptive quadrature did not converge",
                                   total_err);
        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw quadrature_error("interval underflow in quadrature",
                                   total_err);
        Interval left = evaluate(f, worst.a, mid);
        Interval right = evaluate(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;
    }
    return total;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg) {
    if (a == b) return 0.0;
    return run(f, {a, b}, cfg);
}

double integrate_segmented(const std::function<double(double)>& f, double a,
                           double b, const double* break_points, int n_breaks,
                           const QuadratureConfig& cfg) {
    if (a == b) return 0.0;
    std::vector<double> edges{a};
    for (int i = 0; i < n_breaks; ++i) {
        const double p = break_points[i];
        if (p > a && p < b) edges.push_back(p);
    }
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return run(f, edges, cfg);
}

}  // namespace mcleish
