#pragma once

#include <stdexcept>
#include <string>

namespace mcleish {

// Adaptive quadrature ran out of subdivisions before reaching the requested
// tolerance. Carries the error estimate that was actually achieved.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double achieved_tol)
        : std::runtime_error(what + " (achieved tolerance " +
                             std::to_string(achieved_tol) + ")"),
          achieved_tol_(achieved_tol) {}

    double achieved_tolerance() const noexcept { return achieved_tol_; }

private:
    double achieved_tol_;
};

// Sample kurtosis at or below the Gaussian value of 3; the method-of-moments
// normality estimate is undefined. Callers may treat this as the Gaussian limit.
class sub_gaussian_kurtosis_error : public std::runtime_error {
public:
    explicit sub_gaussian_kurtosis_error(double kurtosis)
        : std::runtime_error("sample kurtosis " + std::to_string(kurtosis) +
                             " <= 3: normality estimate undefined"),
          kurtosis_(kurtosis) {}

    double kurtosis() const noexcept { return kurtosis_; }

private:
    double kurtosis_;
};

}  // namespace mcleish
