#pragma once

#include <map>
#include <string>

#include "coha/qrational.hpp"
#include "coha/rational.hpp"

namespace coha {

// Truncated Laurent series in s. Coefficients are exact for every exponent
// <= order(); nothing is known above it. A series with order() == kExact is
// a Laurent polynomial known exactly.
class LaurentTrunc {
public:
    static constexpr int kExact = 1 << 28;

    LaurentTrunc() = default;
    LaurentTrunc(const Rational& c);  // NOLINT: scalars convert implicitly
    explicit LaurentTrunc(std::map<int, Rational> coeffs, int order = kExact);

    static LaurentTrunc s_power(int k, const Rational& c = 1);
    // 1/(1 - s^{step}) = sum_j s^{j*step}, step > 0, valid through `order`.
    static LaurentTrunc geometric(int step, int order);
    // Expansion of f around s = 0, valid through `order`.
    static LaurentTrunc expand(const QRational& f, int order);

    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    int order() const { return order_; }
    bool is_exact() const { return order_ >= kExact; }
    // Set when an operation dropped terms above the order.
    bool truncated() const { return truncated_; }
    Rational coeff(int k) const;
    bool is_zero() const { return coeffs_.empty(); }
    // Lowest exponent with a nonzero coefficient, order()+1 when none is known.
    int low() const;

    LaurentTrunc operator+(const LaurentTrunc& o) const;
    LaurentTrunc operator-(const LaurentTrunc& o) const;
    LaurentTrunc operator-() const;
    LaurentTrunc operator*(const LaurentTrunc& o) const;
    LaurentTrunc operator*(const Rational& c) const;
    LaurentTrunc& operator+=(const LaurentTrunc& o) { return *this = *this + o; }
    LaurentTrunc& operator-=(const LaurentTrunc& o) { return *this = *this - o; }
    LaurentTrunc& operator*=(const LaurentTrunc& o) { return *this = *this * o; }

    // f(s^m), m >= 1.
    LaurentTrunc substitute_power(int m) const;
    // Drop everything above `order`.
    LaurentTrunc truncate(int order) const;

    // Coefficients agree through min(order(), o.order()).
    bool agrees_with(const LaurentTrunc& o) const;
    // Exact equality of the stored data (coefficients and order).
    bool operator==(const LaurentTrunc& o) const { return coeffs_ == o.coeffs_ && order_ == o.order_; }

    std::string to_string() const;

private:
    void clip();

    std::map<int, Rational> coeffs_;
    int order_ = kExact;
    bool truncated_ = false;
};

}  // namespace coha
