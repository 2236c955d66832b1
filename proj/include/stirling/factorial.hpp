#pragma once

// Generalized factorials <z>_{n,delta} = z (z+delta) ... (z+(n-1)delta),
// their complex-order extension through Gamma_k ratios, and the fractional
// difference operator built on them.

#include <vector>

#include "stirling/polynomial.hpp"
#include "stirling/rational.hpp"
#include "stirling/triple.hpp"

namespace stirling {

// Exact product <z>_{n,delta}; the empty product is 1.
Rational gen_factorial(const Rational& z, unsigned n, const Rational& delta);

// Expanded polynomial in z of <z - shift>_{n,delta}.
Polynomial gen_factorial_poly(unsigned n, const Rational& delta, const Rational& shift);

// Complex-order generalized factorial for a positive real increment k:
//   falling: <z>_{gamma,-k} = k^gamma Gamma_k(z + k) / Gamma_k(z - (gamma-1)k)
//   rising:  <z>_{gamma,+k} = k^gamma Gamma_k(z + gamma k) / Gamma_k(z)
// Pole pairs that cancel are evaluated by their limit; a bare numerator pole
// raises pole_error.
Complex gen_factorial_function(Complex z, Complex gamma, double k, bool falling);

// <z>_{gamma,-alpha} for a signed rational alpha: alpha > 0 is the falling
// form, alpha < 0 the rising form with increment |alpha|, alpha = 0 the
// principal-branch power z^gamma.
Complex gen_factorial_signed(Complex z, Complex gamma, const Rational& alpha);

// Stopping rule shared by the infinite binomial-difference series: stop once
// this many consecutive terms fall below tol * max(1, |partial sum|).
inline constexpr unsigned kSeriesQuietRun = 8;
inline constexpr unsigned long kSeriesTermCap = 10000;

struct FracDifferenceResult {
    Complex value;
    unsigned long terms;
};

// True when (gamma, eta, eps) admits an absolutely convergent difference
// series: eta a nonnegative integer (finite sum), or eps > 0 with eta not an
// integer, or eps = 0 with eta not an integer and Re eta > Re gamma.
// On rejection, why (if given) receives a diagnostic.
bool in_convergence_regime(Complex gamma, Complex eta, double eps, std::string* why = nullptr);

// Fractional difference of the generalized factorial,
//   sum_j (-1)^j binom(eta, j) e^{(eta-j) eps} <r + (eta-j) beta>_{gamma,-alpha},
// a finite sum for nonnegative integer eta, otherwise an infinite series
// subject to the stopping rule.
FracDifferenceResult frac_difference_factorial(Complex gamma, Complex eta,
                                               const ParameterTriple& t, double eps,
                                               double tol);

// True when x is within tol of a nonnegative integer, stored in n.
bool near_nonneg_integer(Complex x, long& n, double tol = 1e-12);

}  // namespace stirling
