#include "stirling/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace stirling {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    // Trim surrounding whitespace.
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.erase(s.begin());
    }

    auto slash = s.find('/');
    mpq_class value;
    if (slash != std::string::npos) {
        std::string ns = s.substr(0, slash);
        std::string ds = s.substr(slash + 1);
        if (!all_digits(ns) || !all_digits(ds))
            throw std::invalid_argument("malformed rational literal: " + text);
        mpz_class num(ns), den(ds);
        if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
        value = mpq_class(num, den);
    } else {
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            if (!all_digits(s)) throw std::invalid_argument("malformed rational literal: " + text);
            value = mpq_class(mpz_class(s));
        } else {
            std::string whole = s.substr(0, dot);
            std::string frac = s.substr(dot + 1);
            if (whole.empty()) whole = "0";
            if (frac.empty() || !all_digits(whole) || !all_digits(frac))
                throw std::invalid_argument("malformed rational literal: " + text);
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
            mpz_class num = mpz_class(whole) * scale + mpz_class(frac);
            value = mpq_class(num, scale);
        }
    }
    value.canonicalize();
    if (negative) value = -value;
    return Rational(value);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::invalid_argument("zero to a negative power");
        return Rational(0);
    }
    mpz_class num, den;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), ae);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), ae);
    mpq_class result = e > 0 ? mpq_class(num, den) : mpq_class(den, num);
    result.canonicalize();
    return Rational(result);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial_uint(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

Rational binomial_rat(const Rational& x, unsigned long k) {
    Rational result(1);
    for (unsigned long j = 0; j < k; ++j)
        result *= (x - Rational(static_cast<long>(j))) / Rational(static_cast<long>(j + 1));
    return result;
}

}  // namespace stirling
