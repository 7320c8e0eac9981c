#include "ttt/scalar.hpp"

#include <sstream>

namespace ttt {

Rational rational_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rational_pow: 0 to a negative power");
        return rational_pow(Rational(1) / base, -exp);
    }
    Rational acc(1), b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Complex complex_pow(Complex base, long exp) {
    if (exp < 0) return complex_pow(Complex(1.0) / base, -exp);
    Complex acc(1.0), b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

std::optional<BigInt> exact_sqrt(const BigInt& x) {
    if (x < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(x);
    if (r * r != x) return std::nullopt;
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto n = exact_sqrt(numerator(q));
    auto d = exact_sqrt(denominator(q));
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

std::optional<Rational> rational_fourth_root(const Rational& q) {
    auto s = rational_sqrt(q);
    if (!s) return std::nullopt;
    return rational_sqrt(*s);
}

const Rational& Scalar::rat() const {
    if (!is_exact()) throw ScalarModeError("expected exact-rational scalar, got complex");
    return std::get<Rational>(v_);
}

Complex Scalar::cplx() const {
    if (is_exact()) throw ScalarModeError("expected complex scalar, got exact-rational");
    return std::get<Complex>(v_);
}

Complex Scalar::to_complex() const {
    if (is_exact()) return Complex(std::get<Rational>(v_).convert_to<double>(), 0.0);
    return std::get<Complex>(v_);
}

bool Scalar::is_zero() const {
    if (is_exact()) return std::get<Rational>(v_) == 0;
    return std::get<Complex>(v_) == Complex(0.0, 0.0);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar::inverse of zero");
    if (is_exact()) return Scalar(Rational(1) / std::get<Rational>(v_));
    return Scalar(Complex(1.0) / std::get<Complex>(v_));
}

Scalar Scalar::pow(long exp) const {
    if (is_exact()) return Scalar(rational_pow(std::get<Rational>(v_), exp));
    return Scalar(complex_pow(std::get<Complex>(v_), exp));
}

void Scalar::require_same_mode(const Scalar& a, const Scalar& b, const char* op) {
    if (a.mode() != b.mode())
        throw ScalarModeError(std::string("mixed-mode scalar arithmetic in '") + op +
                              "': exact and complex operands");
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_mode(*this, o, "+");
    if (is_exact())
        std::get<Rational>(v_) += std::get<Rational>(o.v_);
    else
        std::get<Complex>(v_) += std::get<Complex>(o.v_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_mode(*this, o, "-");
    if (is_exact())
        std::get<Rational>(v_) -= std::get<Rational>(o.v_);
    else
        std::get<Complex>(v_) -= std::get<Complex>(o.v_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_mode(*this, o, "*");
    if (is_exact())
        std::get<Rational>(v_) *= std::get<Rational>(o.v_);
    else
        std::get<Complex>(v_) *= std::get<Complex>(o.v_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_mode(*this, o, "/");
    if (o.is_zero()) throw std::domain_error("Scalar division by zero");
    if (is_exact())
        std::get<Rational>(v_) /= std::get<Rational>(o.v_);
    else
        std::get<Complex>(v_) /= std::get<Complex>(o.v_);
    return *this;
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_mode(*this, o, "==");
    if (is_exact()) return std::get<Rational>(v_) == std::get<Rational>(o.v_);
    return std::get<Complex>(v_) == std::get<Complex>(o.v_);
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string Scalar::str() const {
    if (is_exact()) return rational_str(std::get<Rational>(v_));
    std::ostringstream os;
    Complex c = std::get<Complex>(v_);
    os << "(" << c.real() << "," << c.imag() << ")";
    return os.str();
}

Rational parse_rational_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    }
}

Scalar Scalar::parse_rational(const std::string& s) { return Scalar(parse_rational_string(s)); }

} // namespace ttt
