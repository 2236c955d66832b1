#include "stirling/riordan.hpp"

#include <stdexcept>

#include "stirling/factorial.hpp"

namespace stirling {

RiordanPair stirling_generating_pair(const ParameterTriple& t, std::size_t order) {
    Series<Rational> d = t.alpha.is_zero()
                             ? series_exp_scaled(t.r, order)
                             : series_binomial_power(t.alpha, t.r / t.alpha, order);
    Series<Rational> h(order);
    if (!t.alpha.is_zero() && !t.beta.is_zero()) {
        h = series_binomial_power(t.alpha, t.beta / t.alpha, order);
        h.set(0, Rational(0));
        h = h.scaled(Rational(1) / t.beta);
    } else if (!t.alpha.is_zero()) {
        h = series_log1p_scaled(t.alpha, order).scaled(Rational(1) / t.alpha);
    } else if (!t.beta.is_zero()) {
        h = series_exp_scaled(t.beta, order);
        h.set(0, Rational(0));
        h = h.scaled(Rational(1) / t.beta);
    } else {
        h = Series<Rational>::identity(order);
    }
    return {d, h};
}

std::vector<Rational> a_sequence_closed(const ParameterTriple& t, std::size_t terms) {
    if (t.alpha.is_zero())
        throw precondition_error("closed-form A-sequence requires alpha != 0");
    std::vector<Rational> a;
    a.reserve(terms);
    a.push_back(Rational(1));
    Rational inv_alpha = Rational(-1) / t.alpha;
    for (std::size_t n = 1; n < terms; ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k)
            acc += a[n - k] * gen_factorial(t.alpha, static_cast<unsigned>(k + 1), -t.beta) /
                   factorial(k + 1);
        a.push_back(inv_alpha * acc);
    }
    return a;
}

std::vector<Rational> a_sequence_generic(const Series<Rational>& h, std::size_t terms) {
    if (h.order() <= terms)
        throw std::invalid_argument("h series too short for requested A-sequence");
    Series<Rational> hbar = series_inverse(h);
    // hbar = z u(z) with u(0) = 1/h1 != 0; A = z / hbar = 1/u.
    Series<Rational> a_series = hbar.shifted_down(1).reciprocal();
    std::vector<Rational> a;
    a.reserve(terms);
    for (std::size_t j = 0; j < terms; ++j) a.push_back(a_series.coeff(j));
    return a;
}

std::vector<Rational> a_sequence(const ParameterTriple& t, std::size_t terms) {
    if (!t.alpha.is_zero()) return a_sequence_closed(t, terms);
    Series<Rational> h = stirling_generating_pair(t, terms + 1).h;
    return a_sequence_generic(h, terms);
}

StirlingTriangle riordan_triangle_from_a(const std::vector<Rational>& a,
                                         const ParameterTriple& t, unsigned n_max) {
    if (a.size() < n_max)
        throw std::invalid_argument("A-sequence too short for requested triangle");
    // e[n][k] = k! S(n,k) / n!.
    std::vector<std::vector<Rational>> e(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        e[n].resize(n + 1);
        e[n][0] = gen_factorial(t.r, n, -t.alpha) / factorial(n);
        for (unsigned k = 1; k <= n; ++k) {
            Rational acc(0);
            for (unsigned j = 0; k - 1 + j <= n - 1 && j < a.size(); ++j)
                acc += a[j] * e[n - 1][k - 1 + j];
            e[n][k] = acc;
        }
    }
    StirlingTriangle tri{t, Algorithm::kRiordan, {}};
    tri.rows.resize(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        tri.rows[n].resize(n + 1);
        for (unsigned k = 0; k <= n; ++k)
            tri.rows[n][k] = e[n][k] * factorial(n) / factorial(k);
    }
    return tri;
}

StirlingTriangle stirling_triangle_riordan(unsigned n_max, const ParameterTriple& t) {
    t.require_nondegenerate();
    return riordan_triangle_from_a(a_sequence(t, n_max + 1), t, n_max);
}

Rational riordan_entry(const RiordanPair& pair, unsigned n, unsigned k) {
    if (n >= pair.d.order())
        throw std::invalid_argument("pair order too small for requested entry");
    return (pair.d * pair.h.pow_u(k)).coeff(n);
}

}  // namespace stirling
