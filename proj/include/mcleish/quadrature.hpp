#pragma once

#include <functional>

#include "mcleish/errors.hpp"

namespace mcleish {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 200;
};

// Adaptive Gauss-Kronrod (G7,K15) on [a,b]. Worst-interval-first bisection
// until the summed error estimate meets max(abs_tol, rel_tol*|I|).
// Throws quadrature_error when the subdivision budget runs out.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg = {});

// Same, but with user-supplied interior break points (endpoint layers,
// known kinks). break_points need not be sorted; out-of-range entries ignored.
double integrate_segmented(const std::function<double(double)>& f, double a,
                           double b, const double* break_points, int n_breaks,
                           const QuadratureConfig& cfg = {});

}  // namespace mcleish
