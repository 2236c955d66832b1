#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "stirling/errors.hpp"
#include "stirling/stirling_function.hpp"
#include "stirling/triangle.hpp"
#include "support.hpp"

using namespace stirling;

namespace {

const ParameterTriple kSecondKind{Rational(0), Rational(1), Rational(0)};

StirlingFunctionQuery query(Complex gamma, Complex eta, ParameterTriple t, double eps = 0.0) {
    StirlingFunctionQuery q;
    q.gamma = gamma;
    q.eta = eta;
    q.triple = std::move(t);
    q.eps = eps;
    return q;
}

}  // namespace

TEST_CASE("integer orders reproduce the exact triangle") {
    std::mt19937 rng(51);
    for (int i = 0; i < 16; ++i) {
        ParameterTriple t = testing::random_triple(rng, i);
        if (t.beta.sign() <= 0) t.beta = abs(t.beta) + Rational(1, 2);
        StirlingTriangle ref = stirling_triangle_recurrence(6, t);
        for (unsigned n = 0; n <= 6; n += 2)
            for (unsigned k = 0; k <= n; ++k) {
                auto got = stirling_function(query(Complex(double(n), 0.0),
                                                   Complex(double(k), 0.0), t));
                double want = ref.at(n, k).to_double();
                INFO("triple=", t.str(), " n=", n, " k=", k);
                CHECK(std::abs(got.value - Complex(want, 0.0)) <=
                      1e-8 * std::max(1.0, std::abs(want)));
            }
    }
}

TEST_CASE("order zero closed form and delta convention") {
    double eps = 0.5;
    StirlingFunctionQuery q = query(Complex(0.0, 0.0), Complex(2.0, 0.0), kSecondKind, eps);
    double want = std::expm1(eps) * std::expm1(eps) / 2.0;
    CHECK(std::abs(stirling_function(q).value - Complex(want, 0.0)) < 1e-13);

    q.eta = Complex(1.5, 0.0);
    double want15 = std::pow(std::expm1(eps), 1.5) / std::tgamma(2.5);
    CHECK(std::abs(stirling_function(q).value - Complex(want15, 0.0)) < 1e-13);

    q.zero_order = ZeroOrderMode::kKroneckerDelta;
    CHECK(stirling_function(q).value == Complex(0.0, 0.0));
    q.eta = Complex(0.0, 0.0);
    CHECK(stirling_function(q).value == Complex(1.0, 0.0));

    // eps = 0 limits of the closed form
    StirlingFunctionQuery z = query(Complex(0.0, 0.0), Complex(0.0, 0.0), kSecondKind);
    CHECK(stirling_function(z).value == Complex(1.0, 0.0));
    z.eta = Complex(2.5, 0.0);
    CHECK(stirling_function(z).value == Complex(0.0, 0.0));
    z.eta = Complex(-0.5, 0.0);
    CHECK_THROWS_AS(stirling_function(z), precondition_error);
}

TEST_CASE("difference series and generating function agree off the integers") {
    // two fully independent routes to S(n, eta; eps) for integer first index
    ParameterTriple t2{Rational(1, 2), Rational(1), Rational(0)};
    struct Probe {
        ParameterTriple t;
        unsigned n;
        Complex eta;
        double eps;
    };
    for (const Probe& p : {Probe{kSecondKind, 3, Complex(1.5, 0.0), 0.7},
                           Probe{t2, 4, Complex(2.25, 0.5), 0.6},
                           Probe{kSecondKind, 5, Complex(0.75, -0.3), 1.1}}) {
        auto series_route = stirling_function(query(Complex(double(p.n), 0.0), p.eta, p.t, p.eps));
        auto egf_route = egf_coefficients(p.eta, p.t, p.eps, p.n);
        INFO("triple=", p.t.str(), " n=", p.n, " eps=", p.eps);
        CHECK(std::abs(series_route.value - egf_route[p.n]) <=
              1e-8 * std::max(1.0, std::abs(egf_route[p.n])));
    }
}

TEST_CASE("generating function at integer order matches the triangle") {
    auto col2 = egf_coefficients(Complex(2.0, 0.0), kSecondKind, 0.0, 6);
    const double want[] = {0, 0, 1, 3, 7, 15, 31};
    for (unsigned n = 0; n <= 6; ++n)
        CHECK(std::abs(col2[n] - Complex(want[n], 0.0)) < 1e-10 * std::max(1.0, want[n]));

    std::mt19937 rng(52);
    for (int i = 0; i < 10; ++i) {
        ParameterTriple t = testing::random_triple(rng, i);
        StirlingTriangle ref = stirling_triangle_recurrence(7, t);
        for (unsigned k = 0; k <= 3; ++k) {
            auto col = egf_coefficients(Complex(double(k), 0.0), t, 0.0, 7);
            for (unsigned n = 0; n <= 7; ++n) {
                double want_nk = ref.at(n, k).to_double();
                INFO("triple=", t.str(), " n=", n, " k=", k);
                CHECK(std::abs(col[n] - Complex(want_nk, 0.0)) <=
                      1e-8 * std::max(1.0, std::abs(want_nk)));
            }
        }
    }
}

TEST_CASE("recurrence check across regimes") {
    // eta = 0 leaves no earlier column to recurse into
    CHECK_FALSE(verify_fn_recurrence(query(Complex(3.0, 0.0), Complex(0.0, 0.0), kSecondKind))
                    .applicable);

    // exact integer orders
    ParameterTriple t11{Rational(1), Rational(1), Rational(0)};
    RecurrenceCheck integer_check =
        verify_fn_recurrence(query(Complex(5.0, 0.0), Complex(3.0, 0.0), t11));
    CHECK(integer_check.applicable);
    CHECK(integer_check.pass);
    CHECK(integer_check.residual < 1e-10);

    // geometric decay at eps > 0
    StirlingFunctionQuery qe = query(Complex(1.75, 0.0), Complex(2.5, 0.0), kSecondKind, 0.8);
    qe.tol = 1e-10;
    RecurrenceCheck eps_check = verify_fn_recurrence(qe);
    CHECK(eps_check.applicable);
    CHECK(eps_check.pass);

    // power-law decay at eps = 0 needs a wide order gap
    StirlingFunctionQuery q0 = query(Complex(0.5, 0.0), Complex(8.25, 0.0), kSecondKind);
    RecurrenceCheck flat_check = verify_fn_recurrence(q0);
    CHECK(flat_check.applicable);
    CHECK(flat_check.pass);

    // complex orders
    StirlingFunctionQuery qc = query(Complex(1.5, 0.4), Complex(2.75, -0.2), kSecondKind, 0.9);
    qc.tol = 1e-10;
    RecurrenceCheck complex_check = verify_fn_recurrence(qc);
    CHECK(complex_check.applicable);
    CHECK(complex_check.pass);
}

TEST_CASE("function preconditions and regimes") {
    ParameterTriple beta_zero{Rational(1), Rational(0), Rational(0)};
    CHECK_THROWS_AS(stirling_function(query(Complex(2.0, 0.0), Complex(1.0, 0.0), beta_zero)),
                    precondition_error);
    ParameterTriple beta_neg{Rational(0), Rational(-1), Rational(0)};
    CHECK_THROWS_AS(stirling_function(query(Complex(2.0, 0.0), Complex(1.0, 0.0), beta_neg)),
                    precondition_error);
    CHECK_THROWS_AS(
        stirling_function(query(Complex(2.0, 0.0), Complex(1.0, 0.0), kSecondKind, -0.5)),
        precondition_error);
    CHECK_THROWS_AS(stirling_function(query(Complex(2.0, 0.0), Complex(-2.0, 0.0), kSecondKind)),
                    regime_error);
    CHECK_THROWS_AS(stirling_function(query(Complex(1.0, 0.0), Complex(0.5, 0.0), kSecondKind)),
                    regime_error);
}

TEST_CASE("generating function preconditions") {
    ParameterTriple degenerate{Rational(0), Rational(0), Rational(0)};
    CHECK_THROWS_AS(egf_coefficients(Complex(1.0, 0.0), degenerate, 0.0, 3),
                    degenerate_triple_error);
    ParameterTriple beta_zero{Rational(1), Rational(0), Rational(0)};
    CHECK_THROWS_AS(egf_coefficients(Complex(1.0, 0.0), beta_zero, 0.5, 3), precondition_error);
    CHECK_NOTHROW(egf_coefficients(Complex(2.0, 0.0), beta_zero, 0.0, 4));
    CHECK_THROWS_AS(egf_coefficients(Complex(1.5, 0.0), kSecondKind, 0.0, 3), regime_error);
    CHECK_THROWS_AS(egf_coefficients(Complex(1.0, 0.0), kSecondKind, -0.1, 3),
                    precondition_error);
}
