#include <doctest.h>

#include "stirling/polynomial.hpp"
#include "stirling/rational.hpp"

using namespace stirling;

using Poly = Polynomial;

TEST_CASE("polynomial basics") {
    Poly zero;
    CHECK(zero.degree() == -1);
    CHECK(zero(Rational(3)) == Rational(0));

    Poly p({Rational(1), Rational(-2), Rational(1)});  // (z-1)^2
    CHECK(p.degree() == 2);
    CHECK(p(Rational(1)) == Rational(0));
    CHECK(p(Rational(3)) == Rational(4));
    CHECK(p.coeff(5) == Rational(0));
}

TEST_CASE("polynomial trims trailing zeros") {
    Poly p({Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    Poly q = Poly({Rational(0), Rational(1)}) - Poly({Rational(0), Rational(1)});
    CHECK(q.degree() == -1);
}

TEST_CASE("polynomial arithmetic") {
    Poly a({Rational(1), Rational(1)});   // 1 + z
    Poly b({Rational(-1), Rational(1)});  // -1 + z
    Poly prod = a * b;                    // z^2 - 1
    CHECK(prod.coeff(0) == Rational(-1));
    CHECK(prod.coeff(1) == Rational(0));
    CHECK(prod.coeff(2) == Rational(1));
    CHECK((a + b).coeff(0) == Rational(0));
    CHECK((a - b).coeff(0) == Rational(2));
    Poly scaled = Rational(3) * a;
    CHECK(scaled.coeff(1) == Rational(3));
}

TEST_CASE("polynomial derivative") {
    // p = z^3 + 2z: p' = 3z^2 + 2, p'' = 6z, p''' = 6, p'''' = 0
    Poly p({Rational(0), Rational(2), Rational(0), Rational(1)});
    CHECK(p.derivative().coeff(0) == Rational(2));
    CHECK(p.derivative().coeff(2) == Rational(3));
    CHECK(p.derivative(2).coeff(1) == Rational(6));
    CHECK(p.derivative(3).coeff(0) == Rational(6));
    CHECK(p.derivative(4).degree() == -1);
}

TEST_CASE("polynomial shift") {
    // p(z) = z^2, p(z+1) = z^2 + 2z + 1
    Poly p({Rational(0), Rational(0), Rational(1)});
    Poly shifted = p.shifted(Rational(1));
    CHECK(shifted.coeff(0) == Rational(1));
    CHECK(shifted.coeff(1) == Rational(2));
    CHECK(shifted.coeff(2) == Rational(1));
    // shifting back is the identity
    Poly back = shifted.shifted(Rational(-1));
    CHECK(back.coeff(0) == Rational(0));
    CHECK(back.coeff(1) == Rational(0));
    CHECK(back.coeff(2) == Rational(1));
}

TEST_CASE("synthetic division") {
    // z^2 - 1 = (z - 2)(z + 2) + 3
    Poly p({Rational(-1), Rational(0), Rational(1)});
    auto [q, rem] = p.divide_linear(Rational(2));
    CHECK(rem == Rational(3));
    CHECK(q.coeff(0) == Rational(2));
    CHECK(q.coeff(1) == Rational(1));
    // remainder equals evaluation at the node
    CHECK(rem == p(Rational(2)));
}
