#pragma once

// Shared helpers for the test suite: deterministic random rationals and
// parameter triples.

#include <random>

#include "stirling/rational.hpp"
#include "stirling/triple.hpp"

namespace stirling::testing {

inline Rational random_rational(std::mt19937& rng, long num_bound = 6, long den_bound = 4) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

// Non-degenerate triple; every fourth draw zeroes alpha, every fourth beta,
// every eighth both, so the special branches stay covered.
inline ParameterTriple random_triple(std::mt19937& rng, unsigned long index) {
    for (;;) {
        ParameterTriple t{random_rational(rng), random_rational(rng), random_rational(rng)};
        if (index % 8 == 3) {
            t.alpha = Rational(0);
            t.beta = Rational(0);
        } else if (index % 4 == 1) {
            t.alpha = Rational(0);
        } else if (index % 4 == 2) {
            t.beta = Rational(0);
        }
        if (!t.is_degenerate()) return t;
    }
}

}  // namespace stirling::testing
