#include "stirling/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stirling/factorial.hpp"
#include "stirling/series.hpp"

namespace stirling {

namespace {

void partitions_rec(unsigned remaining, unsigned parts_left, unsigned max_part,
                    std::vector<unsigned>& mult,
                    const std::function<void(const std::vector<unsigned>&)>& fn) {
    if (parts_left == 0) {
        if (remaining == 0) fn(mult);
        return;
    }
    // Each remaining part is at least 1 and at most max_part.
    if (remaining < parts_left || remaining > parts_left * max_part) return;
    for (unsigned p = std::min(max_part, remaining - (parts_left - 1)); p >= 1; --p) {
        ++mult[p];
        partitions_rec(remaining - p, parts_left - 1, p, mult, fn);
        --mult[p];
    }
}

}  // namespace

void for_each_partition(unsigned n, unsigned parts,
                        const std::function<void(const std::vector<unsigned>&)>& fn) {
    std::vector<unsigned> mult(n + 1, 0);
    if (n == 0) {
        if (parts == 0) fn(mult);
        return;
    }
    if (parts == 0 || parts > n) return;
    partitions_rec(n, parts, n, mult, fn);
}

template <typename T>
T PartitionWeights<T>::w(unsigned n, unsigned j) const {
    if (n == 0 && j == 0) return detail::scalar_from_long<T>(1);
    if (j >= n) throw std::out_of_range("partition weight W(n,j) needs 0 <= j < n");
    if (a_.size() <= n)
        throw std::invalid_argument("coefficient sequence too short for W(n,j)");
    T total = T();
    for_each_partition(n, n - j, [&](const std::vector<unsigned>& mult) {
        T prod = detail::scalar_from_long<T>(1);
        for (unsigned i = 1; i <= n; ++i) {
            for (unsigned c = 0; c < mult[i]; ++c) prod = prod * a_[i];
            if (mult[i] > 1) {
                T kfact = detail::scalar_from_long<T>(1);
                for (unsigned c = 2; c <= mult[i]; ++c)
                    kfact = kfact * detail::scalar_from_long<T>(c);
                prod = prod / kfact;
            }
        }
        total += prod;
    });
    return total;
}

template class PartitionWeights<Rational>;
template class PartitionWeights<double>;

std::vector<Rational> expansion_coefficients_exact(const ParameterTriple& t, unsigned j_max) {
    t.require_nondegenerate();
    std::vector<Rational> a;
    a.reserve(j_max + 1);
    for (unsigned j = 0; j <= j_max; ++j) {
        if (!t.beta.is_zero()) {
            Rational diff = gen_factorial(t.r + t.beta, j + 1, -t.alpha) -
                            gen_factorial(t.r, j + 1, -t.alpha);
            a.push_back(diff / (factorial(j + 1) * t.beta));
        } else {
            // beta -> 0 limit: derivative of <z>_{j+1,-alpha} at z = r.
            Polynomial p = gen_factorial_poly(j + 1, -t.alpha, Rational(0));
            a.push_back(p.derivative()(t.r) / factorial(j + 1));
        }
    }
    return a;
}

std::vector<double> expansion_coefficients(const ParameterTriple& t, double eps,
                                           unsigned j_max) {
    if (eps == 0.0) {
        std::vector<Rational> exact = expansion_coefficients_exact(t, j_max);
        std::vector<double> out;
        out.reserve(exact.size());
        for (const auto& v : exact) out.push_back(v.to_double());
        return out;
    }
    t.require_nondegenerate();
    if (eps < 0.0) throw precondition_error("expansion coefficients require eps >= 0");
    if (t.beta.is_zero())
        throw precondition_error("eps != 0 requires beta != 0 (the base diverges otherwise)");
    double e = std::exp(eps);
    double beta = t.beta.to_double();
    std::vector<double> a;
    a.reserve(j_max + 1);
    a.push_back(std::expm1(eps) / beta);
    for (unsigned j = 1; j <= j_max; ++j) {
        double hi = gen_factorial(t.r + t.beta, j, -t.alpha).to_double();
        double lo = gen_factorial(t.r, j, -t.alpha).to_double();
        a.push_back((e * hi - lo) / (factorial(j).to_double() * beta));
    }
    return a;
}

namespace {

// [x]_j = x (x-1) ... (x-j+1).
Rational falling(const Rational& x, unsigned j) { return gen_factorial(x, j, Rational(-1)); }

// Top retained j-index: m terms (at least one), clamped to the n-term sum.
unsigned top_index(unsigned n, unsigned m) {
    unsigned want = m == 0 ? 0 : m - 1;
    return std::min(want, n - 1);
}

}  // namespace

Rational asym_estimate_exact(unsigned n, unsigned long mu, const ParameterTriple& t,
                             unsigned m, bool central) {
    t.require_nondegenerate();
    if (mu <= n) throw precondition_error("asymptotic estimate requires mu > n");
    if (n == 0) return Rational(1);
    ParameterTriple base = t;
    if (central) base.r = t.r / Rational(static_cast<long>(mu));
    std::vector<Rational> a = expansion_coefficients_exact(base, n);
    PartitionWeights<Rational> weights(a);
    Rational mu_r(static_cast<long>(mu));
    Rational acc(0);
    unsigned top = top_index(n, m);
    for (unsigned j = 0; j <= top; ++j)
        acc += weights.w(n, j) / falling(mu_r - Rational(static_cast<long>(n - j)), j);
    return acc;
}

double asym_estimate(unsigned n, unsigned long mu, const ParameterTriple& t, double eps,
                     unsigned m, bool central) {
    if (eps == 0.0) return asym_estimate_exact(n, mu, t, m, central).to_double();
    t.require_nondegenerate();
    if (mu <= n) throw precondition_error("asymptotic estimate requires mu > n");
    ParameterTriple base = t;
    if (central) base.r = t.r / Rational(static_cast<long>(mu));
    std::vector<double> a = expansion_coefficients(base, eps, n == 0 ? 0 : n);
    PartitionWeights<double> weights(a);
    double acc = 0.0;
    unsigned top = n == 0 ? 0 : top_index(n, m);
    for (unsigned j = 0; j <= top; ++j) {
        double denom = 1.0;
        double x = static_cast<double>(mu) - static_cast<double>(n - j);
        for (unsigned i = 0; i < j; ++i) denom *= (x - static_cast<double>(i));
        acc += std::pow(a[0], static_cast<double>(mu - n + j)) * weights.w(n, j) / denom;
    }
    return acc;
}

AsymErrorStudy asym_error_study(unsigned n, const std::vector<unsigned long>& mu_grid,
                                const ParameterTriple& t, double eps, unsigned m,
                                bool central) {
    t.require_nondegenerate();
    if (eps != 0.0)
        throw precondition_error("error study requires eps = 0 (no exact oracle otherwise)");
    AsymErrorStudy study;
    study.monotone_decreasing = true;
    for (unsigned long mu : mu_grid) {
        if (mu <= n) throw precondition_error("error study requires every mu > n");
        ParameterTriple target = t;
        if (!central) target.r = t.r * Rational(static_cast<long>(mu));
        StirlingTriangle tri =
            stirling_triangle_recurrence(static_cast<unsigned>(n + mu), target);
        Rational exact = tri.at(static_cast<unsigned>(n + mu), static_cast<unsigned>(mu));
        Rational mu_r(static_cast<long>(mu));
        Rational norm = falling(mu_r, n) * falling(mu_r + Rational(static_cast<long>(n)), n);
        Rational exact_norm = exact / norm;
        Rational estimate = asym_estimate_exact(n, mu, t, m, central);
        Rational diff = abs(estimate - exact_norm);
        double rel = exact_norm.is_zero() ? diff.to_double()
                                          : (diff / abs(exact_norm)).to_double();
        study.rows.push_back({mu, exact_norm, estimate, rel});
    }
    for (std::size_t i = 1; i < study.rows.size(); ++i)
        if (!(study.rows[i].rel_error < study.rows[i - 1].rel_error))
            study.monotone_decreasing = false;
    return study;
}

}  // namespace stirling
