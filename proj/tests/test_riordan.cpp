#include <doctest.h>

#include <random>
#include <vector>

#include "stirling/errors.hpp"
#include "stirling/riordan.hpp"
#include "support.hpp"

using namespace stirling;

namespace {

const ParameterTriple kSecondKind{Rational(0), Rational(1), Rational(0)};
const ParameterTriple kFirstKind{Rational(1), Rational(0), Rational(0)};
const ParameterTriple kLah{Rational(-1), Rational(1), Rational(0)};
const ParameterTriple kBinomial{Rational(0), Rational(0), Rational(1)};

}  // namespace

TEST_CASE("generating pairs in each parameter regime") {
    RiordanPair p2 = stirling_generating_pair(kSecondKind, 8);
    CHECK(p2.d == Series<Rational>::one(8));
    for (std::size_t n = 1; n < 8; ++n) CHECK(p2.h.coeff(n) * factorial(n) == Rational(1));
    CHECK(p2.h.coeff(0) == Rational(0));

    RiordanPair p1 = stirling_generating_pair(kFirstKind, 8);
    CHECK(p1.d == Series<Rational>::one(8));
    CHECK(p1.h == series_log1p_scaled(Rational(1), 8));

    RiordanPair pb = stirling_generating_pair(kBinomial, 8);
    CHECK(pb.d == series_exp_scaled(Rational(1), 8));
    CHECK(pb.h == Series<Rational>::identity(8));

    ParameterTriple mixed{Rational(2), Rational(3), Rational(1)};
    RiordanPair pm = stirling_generating_pair(mixed, 8);
    CHECK(pm.d == series_binomial_power(Rational(2), Rational(1, 2), 8));
    // h = ((1+2z)^{3/2} - 1)/3
    Series<Rational> want = series_binomial_power(Rational(2), Rational(3, 2), 8);
    want.set(0, Rational(0));
    CHECK(pm.h == want.scaled(Rational(1, 3)));

    ParameterTriple degenerate{Rational(0), Rational(0), Rational(0)};
    RiordanPair pd = stirling_generating_pair(degenerate, 8);
    CHECK(pd.d == Series<Rational>::one(8));
    CHECK(pd.h == Series<Rational>::identity(8));
}

TEST_CASE("h always starts as z") {
    std::mt19937 rng(31);
    for (int i = 0; i < 24; ++i) {
        ParameterTriple t = testing::random_triple(rng, i);
        RiordanPair p = stirling_generating_pair(t, 12);
        CHECK(p.h.coeff(0) == Rational(0));
        CHECK(p.h.coeff(1) == Rational(1));
        CHECK(p.d.coeff(0) == Rational(1));
        CHECK(p.d.coeff(1) == t.r);
    }
}

TEST_CASE("A-sequences of the classical arrays") {
    std::vector<Rational> a2 = a_sequence(kSecondKind, 5);
    CHECK(a2 == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(-1, 12),
                                      Rational(1, 24), Rational(-19, 720)});

    std::vector<Rational> a1 = a_sequence(kFirstKind, 5);
    CHECK(a1 == std::vector<Rational>{Rational(1), Rational(-1, 2), Rational(1, 12), Rational(0),
                                      Rational(-1, 720)});

    std::vector<Rational> al = a_sequence(kLah, 5);
    CHECK(al == std::vector<Rational>{Rational(1), Rational(1), Rational(0), Rational(0),
                                      Rational(0)});

    std::vector<Rational> ab = a_sequence(kBinomial, 5);
    CHECK(ab == std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0),
                                      Rational(0)});
}

TEST_CASE("closed and generic A-sequence routes agree") {
    std::mt19937 rng(32);
    for (int i = 0; i < 20; ++i) {
        ParameterTriple t = testing::random_triple(rng, i);
        if (t.alpha.is_zero()) continue;
        std::vector<Rational> closed = a_sequence_closed(t, 8);
        std::vector<Rational> generic =
            a_sequence_generic(stirling_generating_pair(t, 9).h, 8);
        CHECK(closed == generic);
    }
    CHECK_THROWS_AS(a_sequence_closed(kSecondKind, 4), precondition_error);
}

TEST_CASE("A-sequence ignores the shift parameter") {
    ParameterTriple a{Rational(2), Rational(3), Rational(0)};
    ParameterTriple b{Rational(2), Rational(3), Rational(-7, 2)};
    CHECK(a_sequence(a, 6) == a_sequence(b, 6));
    CHECK(a_sequence(a, 3)[1] == Rational(1, 2));
    CHECK(a_sequence(a, 3)[2] == Rational(-5, 12));
}

TEST_CASE("array entries carry the factorial normalization") {
    RiordanPair p2 = stirling_generating_pair(kSecondKind, 8);
    CHECK(riordan_entry(p2, 4, 2) == Rational(7, 12));
    RiordanPair p1 = stirling_generating_pair(kFirstKind, 8);
    CHECK(riordan_entry(p1, 4, 2) == Rational(11, 12));
    CHECK_THROWS_AS(riordan_entry(p2, 8, 0), std::invalid_argument);

    std::mt19937 rng(33);
    for (int i = 0; i < 12; ++i) {
        ParameterTriple t = testing::random_triple(rng, i);
        RiordanPair p = stirling_generating_pair(t, 9);
        StirlingTriangle ref = stirling_triangle_recurrence(8, t);
        for (unsigned n = 0; n <= 8; ++n)
            for (unsigned k = 0; k <= n; ++k)
                CHECK(riordan_entry(p, n, k) * factorial(n) ==
                      ref.at(n, k) * factorial(k));
    }
}

TEST_CASE("triangle reconstruction needs enough A-sequence terms") {
    std::vector<Rational> a = a_sequence(kSecondKind, 3);
    CHECK_THROWS_AS(riordan_triangle_from_a(a, kSecondKind, 5), std::invalid_argument);
    StirlingTriangle ok = riordan_triangle_from_a(a_sequence(kSecondKind, 6), kSecondKind, 5);
    CHECK(ok.at(5, 2) == Rational(15));
    CHECK(ok.at(5, 3) == Rational(25));
}
