#pragma once

namespace mcleish {

// Modified Bessel function of the second kind K_order(x), order real, x > 0.
// Hybrid evaluation: Temme series for x <= 2, Steed continued fraction for
// x > 2, uniform large-order asymptotics above order 100. Returns 0 once
// e^{-x} scaling underflows. Throws std::domain_error for x <= 0 or
// non-finite inputs.
double bessel_k(double order, double x);

// e^x * K_order(x); avoids underflow at large x.
double bessel_k_scaled(double order, double x);

// log K_order(x); valid where K over- or underflows (large order, tiny x).
double log_bessel_k(double order, double x);

// Modified Bessel function of the first kind, order zero, and its scaled
// variant e^{-|x|} I_0(x).
double bessel_i0(double x);
double bessel_i0_scaled(double x);

}  // namespace mcleish
