#include "stirling/polynomial.hpp"

namespace stirling {

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(unsigned deg, const Rational& c) {
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return Polynomial(std::move(v));
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& v : p.c_) v = -v;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> out(p.c_);
    for (auto& v : out) v *= s;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative(unsigned order) const {
    Polynomial p(*this);
    for (unsigned o = 0; o < order && !p.is_zero(); ++o) {
        std::vector<Rational> out;
        out.reserve(p.c_.size() > 0 ? p.c_.size() - 1 : 0);
        for (std::size_t i = 1; i < p.c_.size(); ++i)
            out.push_back(Rational(static_cast<long>(i)) * p.c_[i]);
        p = Polynomial(std::move(out));
    }
    return p;
}

Polynomial Polynomial::shifted(const Rational& c) const {
    // Horner on (z + c): repeatedly multiply the accumulator by (z + c).
    Polynomial acc;
    Polynomial lin({c, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * lin;
        acc += Polynomial::constant(*it);
    }
    return acc;
}

std::pair<Polynomial, Rational> Polynomial::divide_linear(const Rational& x0) const {
    if (c_.empty()) return {Polynomial(), Rational(0)};
    std::vector<Rational> q(c_.size() - 1, Rational(0));
    Rational carry = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c_[i] + carry * x0;
    }
    return {Polynomial(std::move(q)), carry};
}

}  // namespace stirling
