#pragma once

// Generalized Stirling numbers S(n,k) for a parameter triple (alpha, beta, r),
// defined as the connection coefficients in
//   <z>_{n,-alpha} = sum_k S(n,k) <z - r>_{k,-beta}.
// Four independent construction routes live here; the Riordan-array route is
// in riordan.hpp.

#include <string>
#include <vector>

#include "stirling/rational.hpp"
#include "stirling/triple.hpp"

namespace stirling {

enum class Algorithm {
    kExplicit,       // alternating binomial sum / k-th derivative at beta = 0
    kDividedDiff,    // divided-difference table on the nodes r + i beta
    kHorner,         // repeated synthetic division by (z - r - m beta)
    kRecurrence,     // triangular recurrence in (n, k)
    kRiordan,        // A-sequence reconstruction of the Riordan array
};

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

// Lower-triangular table of S(n,k), 0 <= k <= n <= n_max.
struct StirlingTriangle {
    ParameterTriple triple;
    Algorithm algorithm;
    std::vector<std::vector<Rational>> rows;

    unsigned n_max() const { return static_cast<unsigned>(rows.size()) - 1; }
    // Entry S(n,k); zero outside the triangle.
    Rational at(unsigned n, unsigned k) const {
        if (n >= rows.size() || k >= rows[n].size()) return Rational(0);
        return rows[n][k];
    }
};

// Single entry by the explicit formula: for beta != 0 the alternating sum
//   (1/(beta^k k!)) sum_{j=0..k} (-1)^j C(k,j) <r + (k-j) beta>_{n,-alpha},
// for beta = 0 the derivative form (1/k!) D^k <z>_{n,-alpha} at z = r.
// k > n yields 0; S(0,0) = 1 even for the degenerate triple.
Rational stirling_explicit(unsigned n, unsigned k, const ParameterTriple& t);

struct DividedDifferenceRow {
    std::vector<Rational> row;          // S(n, 0..n)
    std::vector<Rational> subdiagonal;  // raw table entries T[i][i-1], i = 1..n
};

// Row n via the divided-difference table of <z>_{n,-alpha} on the nodes
// r, r+beta, ..., r+n beta; the diagonal is S(n, .). The raw subdiagonal is
// returned as well; when alpha = 0 and r = 0 it reads S(n+1, 1..n).
// At beta = 0 the table degenerates to the derivative form and the
// subdiagonal is empty.
DividedDifferenceRow stirling_row_dd(unsigned n, const ParameterTriple& t);

// Row n by synthetic division: divide <z>_{n,-alpha} by (z - r),
// (z - r - beta), ... in turn; the remainders are S(n,0), S(n,1), ...
std::vector<Rational> stirling_row_horner(unsigned n, const ParameterTriple& t);

// Full triangle by the recurrence
//   S(n,k) = (r + k beta - (n-1) alpha) S(n-1,k) + S(n-1,k-1).
StirlingTriangle stirling_triangle_recurrence(unsigned n_max, const ParameterTriple& t);

// Full triangles assembled row-by-row from the other routes.
StirlingTriangle stirling_triangle_explicit(unsigned n_max, const ParameterTriple& t);
StirlingTriangle stirling_triangle_dd(unsigned n_max, const ParameterTriple& t);
StirlingTriangle stirling_triangle_horner(unsigned n_max, const ParameterTriple& t);

// Dispatch on algorithm; kRiordan is implemented in riordan.hpp and routed
// from here for convenience.
StirlingTriangle build_triangle(Algorithm a, unsigned n_max, const ParameterTriple& t);

}  // namespace stirling
