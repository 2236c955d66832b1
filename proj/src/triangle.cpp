#include "stirling/triangle.hpp"

#include <stdexcept>

#include "stirling/factorial.hpp"
#include "stirling/riordan.hpp"

namespace stirling {

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::kExplicit: return "explicit";
        case Algorithm::kDividedDiff: return "dd";
        case Algorithm::kHorner: return "horner";
        case Algorithm::kRecurrence: return "recurrence";
        case Algorithm::kRiordan: return "riordan";
    }
    return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "explicit") return Algorithm::kExplicit;
    if (name == "dd") return Algorithm::kDividedDiff;
    if (name == "horner") return Algorithm::kHorner;
    if (name == "recurrence") return Algorithm::kRecurrence;
    if (name == "riordan") return Algorithm::kRiordan;
    throw std::invalid_argument("unknown algorithm: " + name);
}

Rational stirling_explicit(unsigned n, unsigned k, const ParameterTriple& t) {
    if (k > n) return Rational(0);
    if (n == 0) return Rational(1);
    t.require_nondegenerate();
    if (!t.beta.is_zero()) {
        Rational acc(0);
        for (unsigned j = 0; j <= k; ++j) {
            Rational node = t.r + Rational(static_cast<long>(k - j)) * t.beta;
            Rational term = binomial_uint(k, j) * gen_factorial(node, n, -t.alpha);
            acc += (j % 2 == 0) ? term : -term;
        }
        return acc / (t.beta.pow(k) * factorial(k));
    }
    // beta = 0: (1/k!) D^k <z>_{n,-alpha} at z = r.
    Polynomial p = gen_factorial_poly(n, -t.alpha, Rational(0));
    return p.derivative(k)(t.r) / factorial(k);
}

DividedDifferenceRow stirling_row_dd(unsigned n, const ParameterTriple& t) {
    t.require_nondegenerate();
    DividedDifferenceRow out;
    if (t.beta.is_zero()) {
        // Derivative degeneration: S(n,k) = (1/k!) D^k <z>_{n,-alpha} at r.
        Polynomial p = gen_factorial_poly(n, -t.alpha, Rational(0));
        for (unsigned k = 0; k <= n; ++k) {
            out.row.push_back(p(t.r) / factorial(k));
            p = p.derivative();
        }
        return out;
    }
    // Column-major table; column j divides first differences by j*beta.
    Polynomial p = gen_factorial_poly(n, -t.alpha, Rational(0));
    std::vector<std::vector<Rational>> table(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        table[i].resize(i + 1);
        table[i][0] = p(t.r + Rational(static_cast<long>(i)) * t.beta);
    }
    for (unsigned j = 1; j <= n; ++j) {
        Rational step = Rational(static_cast<long>(j)) * t.beta;
        for (unsigned i = j; i <= n; ++i)
            table[i][j] = (table[i][j - 1] - table[i - 1][j - 1]) / step;
    }
    for (unsigned i = 0; i <= n; ++i) out.row.push_back(table[i][i]);
    for (unsigned i = 1; i <= n; ++i) out.subdiagonal.push_back(table[i][i - 1]);
    return out;
}

std::vector<Rational> stirling_row_horner(unsigned n, const ParameterTriple& t) {
    t.require_nondegenerate();
    std::vector<Rational> row;
    row.reserve(n + 1);
    Polynomial p = gen_factorial_poly(n, -t.alpha, Rational(0));
    for (unsigned m = 0; m < n; ++m) {
        Rational node = t.r + Rational(static_cast<long>(m)) * t.beta;
        auto [q, rem] = p.divide_linear(node);
        row.push_back(rem);
        p = q;
    }
    // After n divisions the quotient is the leading coefficient 1.
    row.push_back(p.coeff(0));
    return row;
}

StirlingTriangle stirling_triangle_recurrence(unsigned n_max, const ParameterTriple& t) {
    t.require_nondegenerate();
    StirlingTriangle tri{t, Algorithm::kRecurrence, {}};
    tri.rows.resize(n_max + 1);
    tri.rows[0] = {Rational(1)};
    for (unsigned n = 1; n <= n_max; ++n) {
        tri.rows[n].resize(n + 1);
        Rational drift = t.r - Rational(static_cast<long>(n - 1)) * t.alpha;
        for (unsigned k = 0; k <= n; ++k) {
            Rational v = k > 0 ? tri.rows[n - 1][k - 1] : Rational(0);
            if (k < n)
                v += (drift + Rational(static_cast<long>(k)) * t.beta) * tri.rows[n - 1][k];
            tri.rows[n][k] = v;
        }
    }
    return tri;
}

namespace {

StirlingTriangle assemble(Algorithm a, unsigned n_max, const ParameterTriple& t,
                          std::vector<Rational> (*row_fn)(unsigned, const ParameterTriple&)) {
    StirlingTriangle tri{t, a, {}};
    tri.rows.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) tri.rows.push_back(row_fn(n, t));
    return tri;
}

std::vector<Rational> explicit_row(unsigned n, const ParameterTriple& t) {
    std::vector<Rational> row;
    row.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) row.push_back(stirling_explicit(n, k, t));
    return row;
}

std::vector<Rational> dd_row(unsigned n, const ParameterTriple& t) {
    return stirling_row_dd(n, t).row;
}

}  // namespace

StirlingTriangle stirling_triangle_explicit(unsigned n_max, const ParameterTriple& t) {
    t.require_nondegenerate();
    return assemble(Algorithm::kExplicit, n_max, t, explicit_row);
}

StirlingTriangle stirling_triangle_dd(unsigned n_max, const ParameterTriple& t) {
    return assemble(Algorithm::kDividedDiff, n_max, t, dd_row);
}

StirlingTriangle stirling_triangle_horner(unsigned n_max, const ParameterTriple& t) {
    return assemble(Algorithm::kHorner, n_max, t, stirling_row_horner);
}

StirlingTriangle build_triangle(Algorithm a, unsigned n_max, const ParameterTriple& t) {
    switch (a) {
        case Algorithm::kExplicit: return stirling_triangle_explicit(n_max, t);
        case Algorithm::kDividedDiff: return stirling_triangle_dd(n_max, t);
        case Algorithm::kHorner: return stirling_triangle_horner(n_max, t);
        case Algorithm::kRecurrence: return stirling_triangle_recurrence(n_max, t);
        case Algorithm::kRiordan: return stirling_triangle_riordan(n_max, t);
    }
    throw std::invalid_argument("unknown algorithm");
}

}  // namespace stirling
