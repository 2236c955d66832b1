#include "stirling/factorial.hpp"

#include <cmath>
#include <stdexcept>

#include "stirling/errors.hpp"
#include "stirling/gammafn.hpp"

namespace stirling {

Rational gen_factorial(const Rational& z, unsigned n, const Rational& delta) {
    Rational acc(1);
    Rational factor = z;
    for (unsigned i = 0; i < n; ++i) {
        acc *= factor;
        factor += delta;
    }
    return acc;
}

Polynomial gen_factorial_poly(unsigned n, const Rational& delta, const Rational& shift) {
    Polynomial acc = Polynomial::constant(Rational(1));
    for (unsigned i = 0; i < n; ++i) {
        Rational c = -shift + Rational(static_cast<long>(i)) * delta;
        acc *= Polynomial({c, Rational(1)});
    }
    return acc;
}

Complex gen_factorial_function(Complex z, Complex gamma, double k, bool falling) {
    if (!(k > 0.0)) throw std::invalid_argument("gen_factorial_function requires k > 0");
    Complex w = z / k;
    Complex ratio = falling ? gamma_ratio(w + 1.0, w - gamma + 1.0)
                            : gamma_ratio(w + gamma, w);
    return std::exp(gamma * std::log(k)) * ratio;
}

Complex gen_factorial_signed(Complex z, Complex gamma, const Rational& alpha) {
    int s = alpha.sign();
    if (s > 0) return gen_factorial_function(z, gamma, alpha.to_double(), true);
    if (s < 0) return gen_factorial_function(z, gamma, -alpha.to_double(), false);
    // Zero increment: principal-branch power z^gamma.
    if (z == Complex(0.0, 0.0)) {
        if (gamma == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
        if (gamma.real() > 0.0) return Complex(0.0, 0.0);
        throw pole_error("0^gamma with Re gamma <= 0", "z = 0");
    }
    return std::pow(z, gamma);
}

bool near_nonneg_integer(Complex x, long& n, double tol) {
    if (std::abs(x.imag()) > tol) return false;
    double r = std::round(x.real());
    if (std::abs(x.real() - r) > tol || r < -0.5) return false;
    n = static_cast<long>(r);
    return true;
}

bool in_convergence_regime(Complex gamma, Complex eta, double eps, std::string* why) {
    long n;
    if (near_nonneg_integer(eta, n)) return true;
    bool integer_eta = std::abs(eta.imag()) < 1e-12 &&
                       std::abs(eta.real() - std::round(eta.real())) < 1e-12;
    if (integer_eta) {
        if (why) *why = "negative integer order has no convergent series";
        return false;
    }
    if (eps > 0.0) return true;
    if (eps == 0.0) {
        if (eta.real() > gamma.real()) return true;
        if (why) *why = "eps = 0 requires Re(eta) > Re(gamma)";
        return false;
    }
    if (why) *why = "eps must be >= 0";
    return false;
}

FracDifferenceResult frac_difference_factorial(Complex gamma, Complex eta,
                                               const ParameterTriple& t, double eps,
                                               double tol) {
    Complex beta_c = to_complex(t.beta);
    Complex r_c = to_complex(t.r);

    long k;
    if (near_nonneg_integer(eta, k)) {
        // Finite sum over j = 0..k with exact binomials.
        Complex acc(0.0, 0.0);
        for (long j = 0; j <= k; ++j) {
            Complex node = r_c + (eta - static_cast<double>(j)) * beta_c;
            Complex term = binomial_uint(k, j).to_double() *
                           std::exp((eta - static_cast<double>(j)) * eps) *
                           gen_factorial_signed(node, gamma, t.alpha);
            acc += (j % 2 == 0) ? term : -term;
        }
        return {acc, static_cast<unsigned long>(k + 1)};
    }

    std::string why;
    if (!in_convergence_regime(gamma, eta, eps, &why))
        throw regime_error("difference series diverges: " + why);

    Complex acc(0.0, 0.0);
    Complex binom(1.0, 0.0);  // binom(eta, j), updated incrementally
    unsigned quiet = 0;
    for (unsigned long j = 0; j <= kSeriesTermCap; ++j) {
        if (j > 0) binom *= (eta - static_cast<double>(j - 1)) / static_cast<double>(j);
        Complex node = r_c + (eta - static_cast<double>(j)) * beta_c;
        Complex term = binom * std::exp((eta - static_cast<double>(j)) * eps) *
                       gen_factorial_signed(node, gamma, t.alpha);
        if (j % 2 == 1) term = -term;
        acc += term;
        double bar = tol * std::max(1.0, std::abs(acc));
        quiet = std::abs(term) < bar ? quiet + 1 : 0;
        if (quiet >= kSeriesQuietRun) return {acc, j + 1};
    }
    throw convergence_error("difference series did not settle within " +
                            std::to_string(kSeriesTermCap) + " terms");
}

}  // namespace stirling
