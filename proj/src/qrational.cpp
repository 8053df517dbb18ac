#include "coha/qrational.hpp"

#include <algorithm>
#include <sstream>

#include "coha/error.hpp"

namespace coha {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UPoly::UPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

UPoly UPoly::monomial(const Rational& c, int exponent) {
    if (exponent < 0) throw InvalidArgumentError("negative exponent in a polynomial");
    std::vector<Rational> v(static_cast<std::size_t>(exponent) + 1, Rational(0));
    v.back() = c;
    return UPoly(std::move(v));
}

void UPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational UPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
    UPoly out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return UPoly(std::move(v));
}

UPoly UPoly::operator*(const Rational& c) const {
    UPoly out(*this);
    for (auto& x : out.coeffs_) x *= c;
    out.normalize();
    return out;
}

Rational UPoly::evaluate(const Rational& s) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
    return acc;
}

UPoly UPoly::reflect() const {
    UPoly out(*this);
    for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
    return out;
}

UPoly UPoly::reverse() const {
    std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
    return UPoly(std::move(v));
}

UPolyDivision divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw InvalidArgumentError("polynomial division by zero");
    UPoly rem = a;
    UPoly quot;
    const Rational lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        UPoly step = UPoly::monomial(rem.leading() / lead, rem.degree() - b.degree());
        quot = quot + step;
        rem = rem - step * b;
    }
    return {quot, rem};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).remainder;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x * (Rational(1) / x.leading());
}

QRational::QRational(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidArgumentError("rational function with zero denominator");
    reduce();
}

void QRational::reduce() {
    if (num_.is_zero()) {
        den_ = UPoly(Rational(1));
        return;
    }
    UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).quotient;
        den_ = divmod(den_, g).quotient;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        num_ = num_ * (Rational(1) / lead);
        den_ = den_ * (Rational(1) / lead);
    }
}

QRational QRational::s_power(int k, const Rational& c) {
    if (k >= 0) return QRational(UPoly::monomial(c, k), UPoly(Rational(1)));
    return QRational(UPoly(c), UPoly::monomial(1, -k));
}

QRational QRational::operator+(const QRational& o) const {
    if (den_ == o.den_) return QRational(num_ + o.num_, den_);
    return QRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRational QRational::operator-() const {
    QRational out(*this);
    out.num_ = -out.num_;
    return out;
}

QRational QRational::operator-(const QRational& o) const { return *this + (-o); }

QRational QRational::operator*(const QRational& o) const {
    if (is_zero() || o.is_zero()) return QRational();
    return QRational(num_ * o.num_, den_ * o.den_);
}

QRational QRational::operator/(const QRational& o) const {
    if (o.is_zero()) throw InvalidArgumentError("division by the zero rational function");
    return QRational(num_ * o.den_, den_ * o.num_);
}

QRational QRational::pow(int e) const {
    if (e < 0) return QRational(Rational(1)) / pow(-e);
    QRational out(Rational(1));
    for (int k = 0; k < e; ++k) out = out * *this;
    return out;
}

bool QRational::is_even() const { return num_.reflect() == num_ && den_.reflect() == den_; }

Rational QRational::evaluate_at_q(const Rational& q) const {
    if (!is_even()) throw InvalidArgumentError("rational function is not even in s");
    auto eval_even = [&](const UPoly& p) {
        Rational acc = 0;
        for (int k = p.degree(); k >= 0; --k)
            if (k % 2 == 0) acc = acc * q + p.coeff(k);
        return acc;
    };
    Rational d = eval_even(den_);
    if (d == 0) throw InvalidArgumentError("pole at the requested value of q");
    return eval_even(num_) / d;
}

Rational QRational::evaluate_at_s(const Rational& s) const {
    Rational d = den_.evaluate(s);
    if (d == 0) throw InvalidArgumentError("pole at the requested value of s");
    return num_.evaluate(s) / d;
}

QRational QRational::invert_variable() const {
    if (is_zero()) return *this;
    return QRational(num_.reverse(), den_.reverse()) * s_power(den_.degree() - num_.degree());
}

std::string to_string(const UPoly& p, const char* var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (k == 0 || a != 1) os << coha::to_string(a) << (k ? "*" : "");
        if (k >= 1) os << var;
        if (k > 1) os << "^" << k;
        first = false;
    }
    return os.str();
}

std::string QRational::to_string() const {
    if (den_ == UPoly(Rational(1))) return coha::to_string(num_);
    return "(" + coha::to_string(num_) + ")/(" + coha::to_string(den_) + ")";
}

}  // namespace coha
