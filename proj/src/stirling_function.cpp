#include "stirling/stirling_function.hpp"

#include <cmath>

#include "stirling/errors.hpp"
#include "stirling/gammafn.hpp"
#include "stirling/riordan.hpp"
#include "stirling/series.hpp"

namespace stirling {

namespace {

// beta^eta Gamma(eta+1) for beta > 0, in log space.
Complex log_prefactor(Complex eta, double beta) {
    return eta * std::log(beta) + log_gamma(eta + 1.0);
}

}  // namespace

StirlingFunctionResult stirling_function(const StirlingFunctionQuery& q) {
    const ParameterTriple& t = q.triple;
    if (t.beta.sign() <= 0)
        throw precondition_error("stirling_function requires beta > 0");
    if (q.eps < 0.0) throw precondition_error("stirling_function requires eps >= 0");
    double beta = t.beta.to_double();

    long k;
    bool eta_integer = near_nonneg_integer(q.eta, k);

    if (q.gamma == Complex(0.0, 0.0)) {
        if (q.zero_order == ZeroOrderMode::kKroneckerDelta)
            return {eta_integer && k == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0), 0};
        // Closed form (e^eps - 1)^eta / (beta^eta Gamma(eta+1)).
        double base = std::expm1(q.eps);
        if (base == 0.0) {
            if (eta_integer && k == 0) return {Complex(1.0, 0.0), 0};
            if (q.eta.real() > 0.0) return {Complex(0.0, 0.0), 0};
            throw precondition_error("S(0, eta; 0) undefined for Re(eta) <= 0");
        }
        Complex value = std::exp(q.eta * std::log(base) - log_prefactor(q.eta, beta));
        return {value, 0};
    }

    if (eta_integer && k < 0)
        throw regime_error("negative integer order has no convergent series");
    FracDifferenceResult diff = frac_difference_factorial(q.gamma, q.eta, t, q.eps, q.tol);
    Complex value;
    if (eta_integer) {
        // Exact integer prefactor beta^k k!.
        value = diff.value / std::pow(beta, static_cast<double>(k)) /
                factorial(static_cast<unsigned long>(k)).to_double();
    } else {
        value = diff.value * std::exp(-log_prefactor(q.eta, beta));
    }
    return {value, diff.terms};
}

RecurrenceCheck verify_fn_recurrence(const StirlingFunctionQuery& q) {
    RecurrenceCheck out;
    long k;
    if (near_nonneg_integer(q.eta, k) && k == 0) return out;  // eta - 1 < 0
    StirlingFunctionQuery down_eta = q;
    down_eta.gamma = q.gamma - 1.0;
    down_eta.eta = q.eta - 1.0;
    StirlingFunctionQuery down_gamma = q;
    down_gamma.gamma = q.gamma - 1.0;

    out.applicable = true;
    out.lhs = stirling_function(q).value;
    Complex coeff = to_complex(q.triple.r) + q.eta * to_complex(q.triple.beta) -
                    (q.gamma - 1.0) * to_complex(q.triple.alpha);
    out.rhs = coeff * stirling_function(down_gamma).value + stirling_function(down_eta).value;
    out.residual = std::abs(out.lhs - out.rhs) / std::max(1.0, std::abs(out.lhs));
    out.pass = out.residual <= 10.0 * q.tol;
    return out;
}

std::vector<Complex> egf_coefficients(Complex eta, const ParameterTriple& t, double eps,
                                      unsigned n_max) {
    t.require_nondegenerate();
    if (eps < 0.0) throw precondition_error("egf_coefficients requires eps >= 0");
    if (t.beta.is_zero() && eps != 0.0)
        throw precondition_error("beta = 0 requires eps = 0 (the base diverges otherwise)");

    long k;
    bool eta_integer = near_nonneg_integer(eta, k);
    std::size_t order = static_cast<std::size_t>(n_max) + 1;

    RiordanPair pair = stirling_generating_pair(t, order);
    Series<Complex> d = to_complex(pair.d);
    // Base u = (e^eps - 1)/beta + e^eps h(z); at beta = 0 (eps = 0 enforced)
    // this is just h.
    Series<Complex> u = to_complex(pair.h);
    if (!t.beta.is_zero()) {
        double em1 = std::expm1(eps);
        u = u.scaled(std::exp(eps));
        u.set(0, u.coeff(0) + Complex(em1 / t.beta.to_double(), 0.0));
    }

    Series<Complex> powered(order);
    Complex log_gamma_eta1;
    if (eta_integer) {
        powered = u.pow_u(static_cast<unsigned long>(k));
        log_gamma_eta1 = log_gamma(Complex(static_cast<double>(k) + 1.0, 0.0));
    } else {
        if (eps == 0.0)
            throw regime_error("non-integer order requires eps > 0 for the generating function");
        Complex u0 = u.coeff(0);
        if (u0 == Complex(0.0, 0.0) || (u0.real() < 0.0 && u0.imag() == 0.0))
            throw precondition_error("generating-function base constant term on the branch cut");
        powered = series_cpow(u, eta);
        log_gamma_eta1 = log_gamma(eta + 1.0);
    }
    Series<Complex> full = d * powered;

    std::vector<Complex> out(n_max + 1);
    double fact = 1.0;
    Complex inv_gamma = std::exp(-log_gamma_eta1);
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n > 0) fact *= static_cast<double>(n);
        out[n] = full.coeff(n) * fact * inv_gamma;
    }
    return out;
}

}  // namespace stirling
