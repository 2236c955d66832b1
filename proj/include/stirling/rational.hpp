#pragma once

// Arbitrary-precision rational scalar. Values are always stored in lowest
// terms with positive denominator; zero is 0/1.

#include <gmpxx.h>

#include <complex>
#include <cstdlib>
#include <iosfwd>
#include <string>

namespace stirling {

using Complex = std::complex<double>;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "p/q", an integer, or a finite decimal such as "-2.5".
    static Rational parse(const std::string& text);

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    double to_double() const { return v_.get_d(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// n! as an exact rational.
Rational factorial(unsigned long n);

// Binomial coefficient C(n, k); zero when k > n.
Rational binomial_uint(unsigned long n, unsigned long k);

// Generalized binomial coefficient binom(x, k) = [x]_k / k! with [x]_k the
// falling factorial x(x-1)...(x-k+1).
Rational binomial_rat(const Rational& x, unsigned long k);

inline Complex to_complex(const Rational& r) { return Complex(r.to_double(), 0.0); }

}  // namespace stirling
