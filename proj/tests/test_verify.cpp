#include <doctest.h>

#include <random>

#include "stirling/errors.hpp"
#include "stirling/verify.hpp"
#include "support.hpp"

using namespace stirling;

TEST_CASE("report keeps the first counterexample") {
    VerifyReport r;
    CHECK(r.pass);
    r.fail("first");
    r.fail("second");
    CHECK_FALSE(r.pass);
    CHECK(r.counterexample == "first");
}

TEST_CASE("defining expansion holds at sample points") {
    std::mt19937 rng(41);
    for (int i = 0; i < 24; ++i) {
        ParameterTriple t = testing::random_triple(rng, i);
        std::vector<Rational> samples;
        for (int s = 0; s < 4; ++s) samples.push_back(testing::random_rational(rng));
        for (unsigned n : {0u, 1u, 4u, 6u}) {
            VerifyReport rep = verify_expansion(n, t, samples);
            INFO("triple=", t.str(), " n=", n, " detail=", rep.counterexample);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("companion triangle is the matrix inverse") {
    VerifyReport frozen = verify_pair_inverse(8, {Rational(2), Rational(1), Rational(1)});
    CHECK(frozen.pass);

    std::mt19937 rng(42);
    for (int i = 0; i < 20; ++i) {
        ParameterTriple t = testing::random_triple(rng, i);
        VerifyReport rep = verify_pair_inverse(7, t);
        INFO("triple=", t.str(), " detail=", rep.counterexample);
        CHECK(rep.pass);
    }
}

TEST_CASE("n-th difference identity") {
    CHECK(verify_difference_identity(2, {Rational(2), Rational(1), Rational(1)}).pass);
    std::mt19937 rng(43);
    for (int i = 0; i < 24; ++i) {
        ParameterTriple t = testing::random_triple(rng, i);
        for (unsigned n : {1u, 2u, 5u}) {
            VerifyReport rep = verify_difference_identity(n, t);
            INFO("triple=", t.str(), " n=", n, " detail=", rep.counterexample);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("A-sequence reproduces h") {
    std::mt19937 rng(44);
    for (int i = 0; i < 16; ++i) {
        ParameterTriple t = testing::random_triple(rng, i);
        VerifyReport rep = verify_asequence_identity(t, 10);
        INFO("triple=", t.str(), " detail=", rep.counterexample);
        CHECK(rep.pass);
    }
}

TEST_CASE("verification rejects the degenerate triple") {
    ParameterTriple d{Rational(0), Rational(0), Rational(0)};
    CHECK_THROWS_AS(verify_expansion(2, d, {Rational(1)}), degenerate_triple_error);
    CHECK_THROWS_AS(verify_pair_inverse(3, d), degenerate_triple_error);
    CHECK_THROWS_AS(verify_difference_identity(2, d), degenerate_triple_error);
    CHECK_THROWS_AS(verify_asequence_identity(d, 6), degenerate_triple_error);
}
