#pragma once

// Complex-order generalized Stirling functions
//   S(gamma, eta; eps) = Delta_beta^{eta,eps} <z>_{gamma,-alpha} |_{z=r}
//                        / (beta^eta Gamma(eta+1)),
// together with their recurrence check and the generating-function route to
// integer-order values.

#include <vector>

#include "stirling/factorial.hpp"
#include "stirling/triple.hpp"

namespace stirling {

// Convention for the order-zero value S(0, eta; eps). Two appear in the
// literature: the closed form (e^eps - 1)^eta / (beta^eta Gamma(eta+1)),
// which is the gamma = 0 instance of the defining series, and the Kronecker
// delta in eta. The closed form is the default.
enum class ZeroOrderMode { kClosedForm, kKroneckerDelta };

struct StirlingFunctionQuery {
    Complex gamma;
    Complex eta;
    ParameterTriple triple;
    double eps = 0.0;
    double tol = 1e-12;
    ZeroOrderMode zero_order = ZeroOrderMode::kClosedForm;
};

struct StirlingFunctionResult {
    Complex value;
    unsigned long terms;
};

// Requires beta > 0 (the node increment) and a convergent regime: eta a
// nonnegative integer (finite sum), eps > 0 with non-integer eta, or eps = 0
// with non-integer eta and Re(eta) > Re(gamma).
StirlingFunctionResult stirling_function(const StirlingFunctionQuery& q);

struct RecurrenceCheck {
    bool applicable = false;  // false when eta - 1 leaves every regime
    Complex lhs;              // S(gamma, eta)
    Complex rhs;              // (r + eta beta - (gamma-1) alpha) S(gamma-1, eta) + S(gamma-1, eta-1)
    double residual = 0.0;    // |lhs - rhs| / max(1, |lhs|)
    bool pass = true;
};

// One-step recurrence residual at (gamma, eta): pass iff residual <= 10 tol.
RecurrenceCheck verify_fn_recurrence(const StirlingFunctionQuery& q);

// Taylor coefficients S(n, eta; eps) for n = 0..n_max from the generating
// function d(z) ((e^eps (1+alpha z)^{beta/alpha} - 1)/beta)^eta / Gamma(eta+1)
// (limit forms at alpha = 0; beta = 0 requires eps = 0). Non-integer eta
// requires eps > 0 so the base series has a nonzero constant term.
std::vector<Complex> egf_coefficients(Complex eta, const ParameterTriple& t, double eps,
                                      unsigned n_max);

}  // namespace stirling
