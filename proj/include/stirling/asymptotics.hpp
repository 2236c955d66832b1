#pragma once

// Large-parameter asymptotics of the generalized Stirling numbers. The
// engine is the partition-indexed weight
//   W(n,j) = sum over partitions of n with n-j parts of prod_i a_i^{k_i}/k_i!
// built from the Taylor coefficients a_i of the generating base
//   g(z) = (1+alpha z)^{r/alpha} (e^eps (1+alpha z)^{beta/alpha} - 1)/beta,
// and the expansion of the normalized Stirling quantity in inverse falling
// factorials of mu.

#include <functional>
#include <vector>

#include "stirling/rational.hpp"
#include "stirling/triangle.hpp"
#include "stirling/triple.hpp"

namespace stirling {

// Invoke fn once per partition of n with exactly `parts` parts; mult[i] is
// the multiplicity of part i (index 0 unused).
void for_each_partition(unsigned n, unsigned parts,
                        const std::function<void(const std::vector<unsigned>&)>& fn);

// Partition weights over an arbitrary coefficient sequence; base[i] is a_i
// (base[0] is unused by the products).
template <typename T>
class PartitionWeights {
public:
    explicit PartitionWeights(std::vector<T> base) : a_(std::move(base)) {}

    // W(n,j) for 0 <= j < n; W(0,0) is the empty product 1.
    T w(unsigned n, unsigned j) const;

private:
    std::vector<T> a_;
};

// Taylor coefficients a_0..a_{j_max} of the base g at eps = 0, where they
// are exact rationals:
//   a_j = (<r+beta>_{j+1,-alpha} - <r>_{j+1,-alpha}) / ((j+1)! beta).
// Here a_0 = 1 identically.
std::vector<Rational> expansion_coefficients_exact(const ParameterTriple& t, unsigned j_max);

// General coefficients for eps >= 0:
//   a_0 = (e^eps - 1)/beta,
//   a_j = (e^eps <r+beta>_{j,-alpha} - <r>_{j,-alpha}) / (j! beta) for j >= 1,
// reducing to the exact values when eps = 0.
std::vector<double> expansion_coefficients(const ParameterTriple& t, double eps,
                                           unsigned j_max);

// m-term estimate of the eps = 0 normalized quantity
//   S(n+mu, mu, alpha, beta, mu r_eff) / ([mu]_n [n+mu]_n)
//     ~ sum_j W(n,j) / [mu-n+j]_j,
// retaining the first max(1, m) terms of the j-sum (m = 0 keeps just the
// leading term). The sum has at most n terms and retaining all of them
// (m >= n) reproduces the normalized quantity exactly, so a genuinely
// asymptotic estimate needs m < n. r_eff is r when central is false and
// r/mu when central is true (so the central form targets the plain triple
// (alpha, beta, r)).
Rational asym_estimate_exact(unsigned n, unsigned long mu, const ParameterTriple& t,
                             unsigned m, bool central);

// Same expansion for eps >= 0, in floating point, including the a_0 powers:
//   sum_j a_0^{mu-n+j} W(n,j) / [mu-n+j]_j.
double asym_estimate(unsigned n, unsigned long mu, const ParameterTriple& t, double eps,
                     unsigned m, bool central);

struct AsymErrorRow {
    unsigned long mu;
    Rational exact_norm;  // S(n+mu, mu, ., mu r_eff) / ([mu]_n [n+mu]_n)
    Rational estimate;
    double rel_error;
};

struct AsymErrorStudy {
    std::vector<AsymErrorRow> rows;
    bool monotone_decreasing;  // strict decrease of rel_error along the grid
};

// Error study against the recurrence-triangle oracle. Only eps = 0 has an
// exact oracle; any other eps is rejected.
AsymErrorStudy asym_error_study(unsigned n, const std::vector<unsigned long>& mu_grid,
                                const ParameterTriple& t, double eps, unsigned m,
                                bool central = false);

}  // namespace stirling
