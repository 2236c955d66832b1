#pragma once

// Exact cross-checks tying the triangle algorithms to their defining
// identities.

#include <string>
#include <vector>

#include "stirling/triangle.hpp"
#include "stirling/triple.hpp"

namespace stirling {

struct VerifyReport {
    bool pass = true;
    std::string counterexample;  // empty when pass

    void fail(const std::string& detail) {
        if (pass) counterexample = detail;
        pass = false;
    }
};

// Defining expansion at sample points:
//   <z>_{n,-alpha} = sum_k S(n,k) <z - r>_{k,-beta} for each sample z.
VerifyReport verify_expansion(unsigned n, const ParameterTriple& t,
                              const std::vector<Rational>& samples);

// Matrix identity [S(alpha,beta,r)] * [S(beta,alpha,-r)] = I up to n_max.
VerifyReport verify_pair_inverse(unsigned n_max, const ParameterTriple& t);

// n-th difference identity: with step alpha != 0,
//   n! alpha^n = sum_k S(n,k) Delta_alpha^n <z - r>_{k,-beta} at z = 0;
// at alpha = 0 the n-th derivative replaces the difference and the left side
// is n!.
VerifyReport verify_difference_identity(unsigned n, const ParameterTriple& t);

// t A(h(t)) = h(t) through the truncation window.
VerifyReport verify_asequence_identity(const ParameterTriple& t, std::size_t order);

}  // namespace stirling
