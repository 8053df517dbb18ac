#pragma once

#include <string>
#include <vector>

#include "coha/rational.hpp"

namespace coha {

// Dense univariate polynomial in s, coefficients low to high, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(const Rational& c);  // NOLINT: constants convert implicitly
    static UPoly monomial(const Rational& c, int exponent);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    Rational leading() const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator-() const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rational& c) const;
    bool operator==(const UPoly&) const = default;

    Rational evaluate(const Rational& s) const;
    // p(-s)
    UPoly reflect() const;
    // s^deg * p(1/s)
    UPoly reverse() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

struct UPolyDivision {
    UPoly quotient;
    UPoly remainder;
};
UPolyDivision divmod(const UPoly& a, const UPoly& b);
// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

// Exact element of Q(s), s = q^{1/2}. Stored reduced with a monic denominator.
class QRational {
public:
    QRational() : num_(), den_(Rational(1)) {}
    QRational(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
    QRational(UPoly num, UPoly den);

    // c * s^k, k may be negative.
    static QRational s_power(int k, const Rational& c = 1);
    // c * q^k = c * s^{2k}
    static QRational q_power(int k, const Rational& c = 1) { return s_power(2 * k, c); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    QRational operator+(const QRational& o) const;
    QRational operator-(const QRational& o) const;
    QRational operator-() const;
    QRational operator*(const QRational& o) const;
    QRational operator/(const QRational& o) const;
    QRational& operator+=(const QRational& o) { return *this = *this + o; }
    QRational& operator-=(const QRational& o) { return *this = *this - o; }
    QRational& operator*=(const QRational& o) { return *this = *this * o; }
    QRational pow(int e) const;
    bool operator==(const QRational&) const = default;

    // f(s) = f(-s)
    bool is_even() const;
    // For even f, the value of f at s^2 = q. Throws if f is odd-ish or has a pole there.
    Rational evaluate_at_q(const Rational& q) const;
    Rational evaluate_at_s(const Rational& s) const;
    // f(1/s)
    QRational invert_variable() const;

    std::string to_string() const;

private:
    void reduce();
    UPoly num_;
    UPoly den_;
};

std::string to_string(const UPoly& p, const char* var = "s");

}  // namespace coha
