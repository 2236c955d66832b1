#pragma once

// Dense univariate polynomial over Rational, coefficients stored in
// ascending degree order with no trailing zeros.

#include <utility>
#include <vector>

#include "stirling/rational.hpp"

namespace stirling {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    // c * z^deg
    static Polynomial monomial(unsigned deg, const Rational& c);

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    // Coefficient of z^i, zero beyond the degree.
    Rational coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rational(0); }
    bool is_zero() const { return c_.empty(); }

    Rational operator()(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const Rational& s, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative(unsigned order = 1) const;

    // p(z + c), exact Taylor shift.
    Polynomial shifted(const Rational& c) const;

    // Synthetic division by (z - x0); returns quotient and remainder p(x0).
    std::pair<Polynomial, Rational> divide_linear(const Rational& x0) const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace stirling
