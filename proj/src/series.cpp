#include "stirling/series.hpp"

namespace stirling {

Series<Rational> series_binomial_power(const Rational& a, const Rational& q, std::size_t order) {
    Series<Rational> out(order);
    Rational c(1);
    out.set(0, c);
    for (std::size_t j = 1; j < order; ++j) {
        // binom(q, j) a^j built incrementally from binom(q, j-1) a^{j-1}.
        c *= (q - Rational(static_cast<long>(j - 1))) * a / Rational(static_cast<long>(j));
        out.set(j, c);
    }
    return out;
}

Series<Rational> series_exp_scaled(const Rational& c, std::size_t order) {
    Series<Rational> out(order);
    Rational t(1);
    out.set(0, t);
    for (std::size_t j = 1; j < order; ++j) {
        t *= c / Rational(static_cast<long>(j));
        out.set(j, t);
    }
    return out;
}

Series<Rational> series_log1p_scaled(const Rational& a, std::size_t order) {
    Series<Rational> out(order);
    Rational p(1);
    for (std::size_t k = 1; k < order; ++k) {
        p *= a;
        Rational term = p / Rational(static_cast<long>(k));
        out.set(k, k % 2 == 1 ? term : -term);
    }
    return out;
}

Series<Complex> to_complex(const Series<Rational>& s) {
    Series<Complex> out(s.order());
    for (std::size_t i = 0; i < s.order(); ++i) out.set(i, to_complex(s.coeff(i)));
    return out;
}

}  // namespace stirling
