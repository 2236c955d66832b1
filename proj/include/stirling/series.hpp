#pragma once

// Truncated formal power series over an exact or floating scalar.
// A Series of order N carries coefficients of z^0 .. z^{N-1}; every
// operation truncates back to that window.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stirling/rational.hpp"

namespace stirling {

// Default truncation window; the CLI may override it via STIRLING_SERIES_ORDER.
inline constexpr std::size_t kDefaultSeriesOrder = 32;

namespace detail {

template <typename T>
T scalar_from_long(long n) {
    if constexpr (std::is_same_v<T, Rational>) return Rational(n);
    else return T(static_cast<double>(n));
}

template <typename T>
bool scalar_is_zero(const T& v) {
    return v == T();
}

}  // namespace detail

template <typename T>
class Series {
public:
    explicit Series(std::size_t order) : c_(order, T()) {
        if (order == 0) throw std::invalid_argument("series order must be positive");
    }
    explicit Series(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("series order must be positive");
    }

    std::size_t order() const { return c_.size(); }
    const T& coeff(std::size_t i) const { return c_.at(i); }
    void set(std::size_t i, const T& v) { c_.at(i) = v; }
    const std::vector<T>& coeffs() const { return c_; }

    Series resized(std::size_t order) const {
        Series out(order);
        for (std::size_t i = 0; i < order && i < c_.size(); ++i) out.c_[i] = c_[i];
        return out;
    }

    static Series zero(std::size_t order) { return Series(order); }
    static Series one(std::size_t order) {
        Series s(order);
        s.c_[0] = detail::scalar_from_long<T>(1);
        return s;
    }
    static Series identity(std::size_t order) {
        Series s(order);
        if (order > 1) s.c_[1] = detail::scalar_from_long<T>(1);
        return s;
    }

    Series operator-() const {
        Series out(*this);
        for (auto& v : out.c_) v = -v;
        return out;
    }
    Series& operator+=(const Series& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_order(b);
        Series out(a.order());
        for (std::size_t i = 0; i < a.order(); ++i) {
            if (detail::scalar_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j < a.order(); ++j)
                out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series scaled(const T& s) const {
        Series out(*this);
        for (auto& v : out.c_) v = v * s;
        return out;
    }

    // Nonnegative integer power by repeated squaring.
    Series pow_u(unsigned long e) const {
        Series result = one(order());
        Series base(*this);
        while (e > 0) {
            if (e & 1) result *= base;
            base = (e >>= 1) > 0 ? base * base : base;
        }
        return result;
    }

    // f(g) for g with zero constant term.
    Series compose(const Series& g) const {
        check_order(g);
        if (!detail::scalar_is_zero(g.coeff(0)))
            throw std::invalid_argument("series composition requires zero constant term");
        Series acc(order());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * g;
            acc.c_[0] += *it;
        }
        return acc;
    }

    // 1 / f for invertible constant term.
    Series reciprocal() const {
        if (detail::scalar_is_zero(c_[0]))
            throw std::invalid_argument("series reciprocal requires nonzero constant term");
        Series out(order());
        T inv0 = detail::scalar_from_long<T>(1) / c_[0];
        out.c_[0] = inv0;
        for (std::size_t m = 1; m < order(); ++m) {
            T acc = T();
            for (std::size_t i = 1; i <= m; ++i) acc += c_[i] * out.c_[m - i];
            out.c_[m] = -inv0 * acc;
        }
        return out;
    }

    friend Series operator/(const Series& a, const Series& b) { return a * b.reciprocal(); }

    // Coefficient-wise derivative; the top coefficient of the window is
    // unknown after differentiation and left at zero.
    Series derivative() const {
        Series out(order());
        for (std::size_t i = 1; i < order(); ++i)
            out.c_[i - 1] = detail::scalar_from_long<T>(static_cast<long>(i)) * c_[i];
        return out;
    }

    // f / z^k, requiring the low-order coefficients to vanish.
    Series shifted_down(std::size_t k) const {
        for (std::size_t i = 0; i < k && i < order(); ++i)
            if (!detail::scalar_is_zero(c_[i]))
                throw std::invalid_argument("series not divisible by z^k");
        Series out(order());
        for (std::size_t i = k; i < order(); ++i) out.c_[i - k] = c_[i];
        return out;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    void check_order(const Series& o) const {
        if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    }
    std::vector<T> c_;
};

// exp(f). An exact scalar requires a zero constant term; the complex series
// factors out exp(f0).
template <typename T>
Series<T> series_exp(const Series<T>& f) {
    T c0 = f.coeff(0);
    if constexpr (std::is_same_v<T, Rational>) {
        if (!c0.is_zero())
            throw std::invalid_argument("exact series exp requires zero constant term");
    }
    Series<T> out = Series<T>::one(f.order());
    for (std::size_t m = 1; m < f.order(); ++m) {
        T acc = T();
        for (std::size_t i = 1; i <= m; ++i)
            acc += detail::scalar_from_long<T>(static_cast<long>(i)) * f.coeff(i) * out.coeff(m - i);
        out.set(m, acc / detail::scalar_from_long<T>(static_cast<long>(m)));
    }
    if constexpr (!std::is_same_v<T, Rational>) {
        if (!detail::scalar_is_zero(c0)) out = out.scaled(std::exp(c0));
    }
    return out;
}

// log(f). An exact scalar requires constant term 1; the complex series uses
// the principal logarithm of f0, which must avoid the branch cut.
template <typename T>
Series<T> series_log(const Series<T>& f) {
    T c0 = f.coeff(0);
    T l0 = T();
    if constexpr (std::is_same_v<T, Rational>) {
        if (c0 != Rational(1))
            throw std::invalid_argument("exact series log requires constant term 1");
    } else {
        if (c0 == T() || (c0.real() < 0.0 && c0.imag() == 0.0))
            throw std::invalid_argument("series log constant term on the branch cut");
        l0 = std::log(c0);
    }
    Series<T> q = f.derivative() / f;
    Series<T> out(f.order());
    out.set(0, l0);
    for (std::size_t m = 1; m < f.order(); ++m)
        out.set(m, q.coeff(m - 1) / detail::scalar_from_long<T>(static_cast<long>(m)));
    return out;
}

// f^eta for complex exponent via exp(eta log f).
inline Series<Complex> series_cpow(const Series<Complex>& f, Complex eta) {
    return series_exp(series_log(f).scaled(eta));
}

// Compositional inverse g of h: h(g(z)) = z, requiring h0 = 0 and h1 != 0.
template <typename T>
Series<T> series_inverse(const Series<T>& h) {
    if (!detail::scalar_is_zero(h.coeff(0)))
        throw std::invalid_argument("compositional inverse requires zero constant term");
    if (detail::scalar_is_zero(h.coeff(1)))
        throw std::invalid_argument("compositional inverse requires nonzero linear term");
    Series<T> g(h.order());
    T inv1 = detail::scalar_from_long<T>(1) / h.coeff(1);
    if (h.order() > 1) g.set(1, inv1);
    for (std::size_t m = 2; m < h.order(); ++m) {
        // With g known below order m, [z^m] h(g) is h1 * g_m plus terms that
        // involve only lower-order coefficients; solve for g_m.
        T residue = h.compose(g).coeff(m);
        g.set(m, -inv1 * residue);
    }
    return g;
}

// (1 + a z)^q with exact rational coefficients binom(q, j) a^j.
Series<Rational> series_binomial_power(const Rational& a, const Rational& q, std::size_t order);

// exp(c z) with exact rational coefficients c^j / j!.
Series<Rational> series_exp_scaled(const Rational& c, std::size_t order);

// log(1 + a z) with exact rational coefficients (-1)^{k-1} a^k / k.
Series<Rational> series_log1p_scaled(const Rational& a, std::size_t order);

Series<Complex> to_complex(const Series<Rational>& s);

}  // namespace stirling
