#include "stirling/verify.hpp"

#include "stirling/factorial.hpp"
#include "stirling/riordan.hpp"

namespace stirling {

VerifyReport verify_expansion(unsigned n, const ParameterTriple& t,
                              const std::vector<Rational>& samples) {
    t.require_nondegenerate();
    VerifyReport report;
    std::vector<Rational> row = stirling_row_horner(n, t);
    for (const Rational& z : samples) {
        Rational lhs = gen_factorial(z, n, -t.alpha);
        Rational rhs(0);
        for (unsigned k = 0; k <= n; ++k)
            rhs += row[k] * gen_factorial(z - t.r, k, -t.beta);
        if (lhs != rhs)
            report.fail("n=" + std::to_string(n) + " z=" + z.str() + " lhs=" + lhs.str() +
                        " rhs=" + rhs.str());
    }
    return report;
}

VerifyReport verify_pair_inverse(unsigned n_max, const ParameterTriple& t) {
    t.require_nondegenerate();
    VerifyReport report;
    StirlingTriangle A = stirling_triangle_recurrence(n_max, t);
    StirlingTriangle B = stirling_triangle_recurrence(n_max, dual_triple(t));
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned m = 0; m <= n; ++m) {
            Rational acc(0);
            for (unsigned k = m; k <= n; ++k) acc += A.at(n, k) * B.at(k, m);
            Rational expect(n == m ? 1 : 0);
            if (acc != expect) {
                report.fail("triple=" + t.str() + " entry (" + std::to_string(n) + "," +
                            std::to_string(m) + ") = " + acc.str());
                return report;
            }
        }
    }
    return report;
}

VerifyReport verify_difference_identity(unsigned n, const ParameterTriple& t) {
    t.require_nondegenerate();
    VerifyReport report;
    std::vector<Rational> row = stirling_row_horner(n, t);
    Rational rhs(0);
    for (unsigned k = 0; k <= n; ++k) {
        // Basis polynomial <z - r>_{k,-beta} as a polynomial in z.
        Polynomial p = gen_factorial_poly(k, -t.beta, t.r);
        if (t.alpha.is_zero()) {
            p = p.derivative(n);
        } else {
            for (unsigned step = 0; step < n; ++step) p = p.shifted(t.alpha) - p;
        }
        rhs += row[k] * p(Rational(0));
    }
    Rational lhs = factorial(n) * t.alpha.pow(static_cast<long>(n));
    if (t.alpha.is_zero()) lhs = factorial(n);
    if (lhs != rhs)
        report.fail("triple=" + t.str() + " n=" + std::to_string(n) + " lhs=" + lhs.str() +
                    " rhs=" + rhs.str());
    return report;
}

VerifyReport verify_asequence_identity(const ParameterTriple& t, std::size_t order) {
    t.require_nondegenerate();
    VerifyReport report;
    Series<Rational> h = stirling_generating_pair(t, order).h;
    std::vector<Rational> a = a_sequence(t, order);
    Series<Rational> a_series(std::vector<Rational>(a.begin(), a.end()));
    // t A(h(t)) truncates to h(t) when the identity holds.
    Series<Rational> lhs = a_series.compose(h);
    for (std::size_t i = 0; i + 1 < order; ++i) {
        Rational shifted = i == 0 ? Rational(0) : lhs.coeff(i - 1);
        if (shifted != h.coeff(i)) {
            report.fail("triple=" + t.str() + " coefficient " + std::to_string(i));
            return report;
        }
    }
    return report;
}

}  // namespace stirling
