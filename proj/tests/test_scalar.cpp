#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttt/scalar.hpp"

using namespace ttt;

TEST_CASE("rational parse / serialize round-trips") {
    CHECK(Scalar::parse_rational("81/16").rat() == Rational(81, 16));
    CHECK(Scalar::parse_rational("-3/9").rat() == Rational(-1, 3));
    CHECK(Scalar::parse_rational("7").rat() == 7);
    CHECK(Scalar(Rational(257, 16)).str() == "257/16");
    CHECK(Scalar(Rational(-4)).str() == "-4");
    CHECK_THROWS_AS(Scalar::parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse_rational(""), std::invalid_argument);
}

TEST_CASE("mixed-mode arithmetic is rejected") {
    Scalar r(Rational(1, 2));
    Scalar c(Complex(0.5, 0.0));
    CHECK_THROWS_AS(r + c, ScalarModeError);
    CHECK_THROWS_AS(r * c, ScalarModeError);
    CHECK_THROWS_AS((void)(r == c), ScalarModeError);
    CHECK_THROWS_AS(c.rat(), ScalarModeError);
    CHECK_THROWS_AS(r.cplx(), ScalarModeError);
    CHECK(r.to_complex() == Complex(0.5, 0.0)); // explicit view is fine
}

TEST_CASE("integer powers, both signs") {
    CHECK(rational_pow(Rational(3, 2), 4) == Rational(81, 16));
    CHECK(rational_pow(Rational(2), -3) == Rational(1, 8));
    CHECK(rational_pow(Rational(5), 0) == 1);
    CHECK(Scalar(Rational(16)).pow(-1).rat() == Rational(1, 16));
    Complex z = complex_pow(Complex(0.0, 1.0), 2);
    CHECK(std::abs(z - Complex(-1.0, 0.0)) < 1e-15);
}

TEST_CASE("exact fourth roots exist exactly when expected") {
    CHECK(rational_fourth_root(Rational(16)) == Rational(2));
    CHECK(rational_fourth_root(Rational(81, 16)) == Rational(3, 2));
    CHECK(rational_fourth_root(Rational(1)) == Rational(1));
    CHECK(!rational_fourth_root(Rational(2)).has_value());
    CHECK(!rational_fourth_root(Rational(8, 3)).has_value());
    CHECK(!rational_fourth_root(Rational(-16)).has_value());
    // big operands stay exact
    Rational big = rational_pow(Rational(123456789, 987654321), 4);
    CHECK(rational_fourth_root(big) == Rational(123456789, 987654321));
}

TEST_CASE("division and inverse guard zero") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
    CHECK(Scalar(Rational(81, 16)).inverse().rat() == Rational(16, 81));
}
