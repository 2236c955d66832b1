#include <doctest.h>

#include <cmath>
#include <complex>

#include "stirling/errors.hpp"
#include "stirling/gammafn.hpp"

using namespace stirling;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("log_gamma matches lgamma on the positive axis") {
    for (double x : {0.5, 1.0, 1.5, 2.0, 3.7, 10.2, 19.5}) {
        Complex lg = log_gamma(Complex(x, 0.0));
        CHECK(std::abs(lg.real() - std::lgamma(x)) < 1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
        CHECK(std::abs(lg.imag()) < 1e-12);
    }
}

TEST_CASE("log_gamma reflection on the negative axis") {
    // Gamma(-2.5) = Gamma(0.5) / ((-2.5)(-1.5)(-0.5))
    double want = std::sqrt(kPi) / (-2.5 * -1.5 * -0.5);
    Complex got = std::exp(log_gamma(Complex(-2.5, 0.0)));
    CHECK(rel_err(got, Complex(want, 0.0)) < 1e-12);
}

TEST_CASE("log_gamma functional equation") {
    for (Complex z : {Complex(0.3, 2.0), Complex(-1.7, 0.5), Complex(5.0, -3.0), Complex(0.25, 0.0)}) {
        Complex ratio = std::exp(log_gamma(z + 1.0) - log_gamma(z));
        CHECK(rel_err(ratio, z) < 1e-12);
    }
}

TEST_CASE("log_gamma modulus on the critical line") {
    // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
    double y = 1.5;
    double got = std::norm(std::exp(log_gamma(Complex(0.5, y))));
    CHECK(rel_err(Complex(got, 0.0), Complex(kPi / std::cosh(kPi * y), 0.0)) < 1e-12);
}

TEST_CASE("log_gamma conjugate symmetry") {
    Complex z(1.3, 2.4);
    Complex a = std::exp(log_gamma(z));
    Complex b = std::exp(log_gamma(std::conj(z)));
    CHECK(std::abs(a - std::conj(b)) < 1e-12 * std::abs(a));
}

TEST_CASE("log_gamma pole detection") {
    CHECK_THROWS_AS(log_gamma(Complex(0.0, 0.0)), pole_error);
    CHECK_THROWS_AS(log_gamma(Complex(-1.0, 0.0)), pole_error);
    CHECK_THROWS_AS(log_gamma(Complex(-5.0, 0.0)), pole_error);

    long m = 99;
    CHECK(near_gamma_pole(Complex(-3.0, 0.0), m));
    CHECK(m == -3);
    CHECK(near_gamma_pole(Complex(-3.0 + 1e-10, 0.0), m));
    CHECK_FALSE(near_gamma_pole(Complex(0.5, 0.0), m));
    CHECK_FALSE(near_gamma_pole(Complex(-3.0, 0.5), m));
    CHECK_FALSE(near_gamma_pole(Complex(2.0, 0.0), m));
}

TEST_CASE("gamma_ratio plain values") {
    CHECK(rel_err(gamma_ratio(Complex(5.0, 0.0), Complex(3.0, 0.0)), Complex(12.0, 0.0)) < 1e-13);
    Complex z(0.7, 1.1);
    CHECK(rel_err(gamma_ratio(z + 1.0, z), z) < 1e-13);
}

TEST_CASE("gamma_ratio cancelling pole pairs") {
    // lim Gamma(t)/Gamma(-4+t) = (-1)^4 4!/0! = 24
    CHECK(rel_err(gamma_ratio(Complex(0.0, 0.0), Complex(-4.0, 0.0)), Complex(24.0, 0.0)) < 1e-13);
    // lim Gamma(-1+t)/Gamma(-3+t) = (-1)^2 3!/1! = 6
    CHECK(rel_err(gamma_ratio(Complex(-1.0, 0.0), Complex(-3.0, 0.0)), Complex(6.0, 0.0)) < 1e-13);
    // sign flip for an odd pole-order difference: lim Gamma(-2+t)/Gamma(-3+t) = -3
    CHECK(rel_err(gamma_ratio(Complex(-2.0, 0.0), Complex(-3.0, 0.0)), Complex(-3.0, 0.0)) < 1e-13);
}

TEST_CASE("gamma_ratio lone poles") {
    CHECK(std::abs(gamma_ratio(Complex(2.5, 0.0), Complex(-1.0, 0.0))) == 0.0);
    CHECK_THROWS_AS(gamma_ratio(Complex(-2.0, 0.0), Complex(2.5, 0.0)), pole_error);
}

TEST_CASE("k_gamma reduces to Gamma at k=1") {
    for (double x : {0.7, 2.3, 6.1}) {
        CHECK(rel_err(k_gamma(Complex(x, 0.0), 1.0), Complex(std::exp(std::lgamma(x)), 0.0)) < 1e-13);
    }
}

TEST_CASE("k_gamma fixed points and functional equation") {
    for (double k : {0.5, 2.0, 3.0}) {
        // Gamma_k(k) = k^0 Gamma(1) = 1
        CHECK(rel_err(k_gamma(Complex(k, 0.0), k), Complex(1.0, 0.0)) < 1e-13);
        // Gamma_k(z + k) = z Gamma_k(z)
        Complex z(1.3, 0.4);
        CHECK(rel_err(k_gamma(z + k, k), z * k_gamma(z, k)) < 1e-13);
    }
    // Gamma_2(1) = 2^{-1/2} Gamma(1/2) = sqrt(pi/2)
    CHECK(rel_err(k_gamma(Complex(1.0, 0.0), 2.0), Complex(std::sqrt(kPi / 2.0), 0.0)) < 1e-13);
    CHECK_THROWS_AS(k_gamma(Complex(1.0, 0.0), 0.0), std::invalid_argument);
}

TEST_CASE("k_gamma limit probe converges") {
    // Finite-n error decays like w(w-1)/(2n) with w = z/k.
    Complex z(5.0, 0.0);
    double k = 0.5;
    Complex exact = k_gamma(z, k);
    double e1 = std::abs(k_gamma_limit_probe(z, k, 20000) - exact) / std::abs(exact);
    double e2 = std::abs(k_gamma_limit_probe(z, k, 200000) - exact) / std::abs(exact);
    CHECK(e1 < 3e-3);
    CHECK(e2 < 3e-4);
    CHECK(e2 < e1 / 5.0);

    Complex zc(2.0, 1.0);
    double ec = std::abs(k_gamma_limit_probe(zc, 2.0, 100000) - k_gamma(zc, 2.0)) /
                std::abs(k_gamma(zc, 2.0));
    CHECK(ec < 1e-4);
}
