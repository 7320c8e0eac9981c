#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "ttt/errors.hpp"

namespace ttt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

enum class ScalarMode { Exact, ComplexFloat };

// b^e for integer e (negative allowed, b != 0 then).
Rational rational_pow(const Rational& base, long exp);
Complex complex_pow(Complex base, long exp);

// Exact integer roots; nullopt unless x is a perfect square / fourth power.
std::optional<BigInt> exact_sqrt(const BigInt& x);
std::optional<Rational> rational_sqrt(const Rational& q);
std::optional<Rational> rational_fourth_root(const Rational& q);

// One value of the generating-function algebra: exact rational or complex double.
// Arithmetic never mixes the two modes; a mixed expression throws ScalarModeError.
class Scalar {
  public:
    Scalar() : v_(Rational(0)) {}
    Scalar(int n) : v_(Rational(n)) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(Complex c) : v_(c) {}

    ScalarMode mode() const {
        return std::holds_alternative<Rational>(v_) ? ScalarMode::Exact : ScalarMode::ComplexFloat;
    }
    bool is_exact() const { return mode() == ScalarMode::Exact; }

    const Rational& rat() const;
    Complex cplx() const;

    // Explicit lossy view; legal on either mode.
    Complex to_complex() const;
    double abs() const { return std::abs(to_complex()); }

    bool is_zero() const;
    Scalar inverse() const;
    Scalar pow(long exp) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    // Exact comparison; mixing modes throws.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "p/q" (or "p" when integral) in exact mode, "(re,im)" in complex mode.
    std::string str() const;

    // Parses "p", "-p/q". Throws std::invalid_argument on malformed input.
    static Scalar parse_rational(const std::string& s);

  private:
    std::variant<Rational, Complex> v_;

    static void require_same_mode(const Scalar& a, const Scalar& b, const char* op);
};

std::string rational_str(const Rational& r);
Rational parse_rational_string(const std::string& s);

} // namespace ttt
