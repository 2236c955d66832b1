#pragma once

// Riordan-array view of the generalized Stirling triangle. The exponential
// generating pair is
//   d(z) = (1 + alpha z)^{r/alpha},
//   h(z) = ((1 + alpha z)^{beta/alpha} - 1) / beta,
// with the evident limits at alpha = 0 and/or beta = 0. The classical array
// entry [t^n] d(t) h(t)^k equals k! S(n,k) / n!, and the A-sequence (a_j)
// characterized by t A(h(t)) = h(t) rebuilds each row from the previous one.

#include <vector>

#include "stirling/series.hpp"
#include "stirling/triangle.hpp"
#include "stirling/triple.hpp"

namespace stirling {

struct RiordanPair {
    Series<Rational> d;
    Series<Rational> h;
};

// Exact generating pair for the triple; the degenerate triple yields the
// identity pair (1, z).
RiordanPair stirling_generating_pair(const ParameterTriple& t,
                                     std::size_t order = kDefaultSeriesOrder);

// Closed-form A-sequence recursion, valid for alpha != 0:
//   a_0 = 1,  a_n = -(1/alpha) sum_{k=1..n} a_{n-k} <alpha>_{k+1,-beta} / (k+1)!.
std::vector<Rational> a_sequence_closed(const ParameterTriple& t, std::size_t terms);

// Generic route for any admissible h: A(z) = z / hbar(z) with hbar the
// compositional inverse of h. Requires h of order > terms.
std::vector<Rational> a_sequence_generic(const Series<Rational>& h, std::size_t terms);

// Dispatch: closed form when alpha != 0, generic otherwise.
std::vector<Rational> a_sequence(const ParameterTriple& t, std::size_t terms);

// Rebuild the triangle from an A-sequence: with e_{n,k} = k! S(n,k) / n!,
//   e_{n,k} = sum_j a_j e_{n-1,k-1+j},
// seeded by the exact first column e_{n,0} = <r>_{n,-alpha} / n!.
StirlingTriangle riordan_triangle_from_a(const std::vector<Rational>& a,
                                         const ParameterTriple& t, unsigned n_max);

// Convenience: A-sequence then reconstruction.
StirlingTriangle stirling_triangle_riordan(unsigned n_max, const ParameterTriple& t);

// Classical array entry [t^n] d(t) h(t)^k, equal to k! S(n,k) / n!.
Rational riordan_entry(const RiordanPair& pair, unsigned n, unsigned k);

}  // namespace stirling
