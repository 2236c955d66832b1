#pragma once

// Complex log-Gamma and the one-parameter Gamma deformation
// Gamma_k(z) = k^{z/k - 1} Gamma(z/k) for k > 0.

#include "stirling/rational.hpp"

namespace stirling {

// log Gamma(z) for complex z, accurate to ~1e-14 relative in exp on
// Re z in [0.5, 20], |Im z| <= 20; reflection handles Re z < 0.5.
// The result may differ from the analytic continuation of log Gamma by a
// multiple of 2*pi*i, which exp() cannot see; downstream consumers only use
// exponentials of differences.
Complex log_gamma(Complex z);

// True when z is within tol of a nonpositive integer (a Gamma pole);
// stores that integer in m.
bool near_gamma_pole(Complex z, long& m, double tol = 1e-9);

// Gamma(a) / Gamma(b). When both arguments sit at poles whose order
// difference is an integer, the cancelling limit (-1)^{a-b} (-b)! / (-a)!
// is returned; a lone pole in the denominator gives 0; a lone pole in the
// numerator raises pole_error.
Complex gamma_ratio(Complex a, Complex b);

// Gamma_k(z) = k^{z/k - 1} Gamma(z/k), k > 0.
Complex k_gamma(Complex z, double k);

// Finite-n probe of the defining limit: n! k^n (nk)^{z/k - 1} / <z>_{n,k},
// which converges to Gamma_k(z) as n grows. Evaluated in log space.
Complex k_gamma_limit_probe(Complex z, double k, unsigned long n);

}  // namespace stirling
