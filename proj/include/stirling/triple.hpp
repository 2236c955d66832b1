#pragma once

// The parameter triple (alpha, beta, r) that selects which generalized
// Stirling family is being computed.

#include <string>

#include "stirling/errors.hpp"
#include "stirling/rational.hpp"

namespace stirling {

struct ParameterTriple {
    Rational alpha;
    Rational beta;
    Rational r;

    bool is_degenerate() const { return alpha.is_zero() && beta.is_zero() && r.is_zero(); }

    void require_nondegenerate() const {
        if (is_degenerate()) throw degenerate_triple_error();
    }

    std::string str() const {
        return "(" + alpha.str() + "," + beta.str() + "," + r.str() + ")";
    }

    friend bool operator==(const ParameterTriple& a, const ParameterTriple& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.r == b.r;
    }
};

// The companion triple (beta, alpha, -r); the two triangles are mutually
// inverse lower-triangular matrices.
inline ParameterTriple dual_triple(const ParameterTriple& t) {
    return ParameterTriple{t.beta, t.alpha, -t.r};
}

}  // namespace stirling
