#include "coha/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "coha/error.hpp"

namespace coha {

namespace {

int clamp_order(long v) {
    if (v >= LaurentTrunc::kExact) return LaurentTrunc::kExact;
    if (v <= -LaurentTrunc::kExact) return -LaurentTrunc::kExact;
    return static_cast<int>(v);
}

}  // namespace

LaurentTrunc::LaurentTrunc(const Rational& c) {
    if (c != 0) coeffs_.emplace(0, c);
}

LaurentTrunc::LaurentTrunc(std::map<int, Rational> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
    clip();
}

void LaurentTrunc::clip() {
    auto it = coeffs_.upper_bound(order_);
    if (it != coeffs_.end()) {
        truncated_ = true;
        coeffs_.erase(it, coeffs_.end());
    }
}

LaurentTrunc LaurentTrunc::s_power(int k, const Rational& c) { return LaurentTrunc({{k, c}}); }

LaurentTrunc LaurentTrunc::geometric(int step, int order) {
    if (step <= 0) throw InvalidArgumentError("geometric series needs a positive step");
    std::map<int, Rational> c;
    for (int k = 0; k <= order; k += step) c.emplace(k, 1);
    LaurentTrunc out(std::move(c), order);
    out.truncated_ = true;
    return out;
}

LaurentTrunc LaurentTrunc::expand(const QRational& f, int order) {
    if (f.is_zero()) return LaurentTrunc(std::map<int, Rational>{}, order);
    const UPoly& num = f.num();
    const UPoly& den = f.den();
    int u = 0, v = 0;
    while (num.coeff(u) == 0) ++u;
    while (den.coeff(v) == 0) ++v;
    const int shift = u - v;
    // power series num'/den' through exponent order - shift
    const int n = order - shift;
    std::map<int, Rational> out;
    if (n >= 0) {
        std::vector<Rational> series(static_cast<std::size_t>(n) + 1, Rational(0));
        const Rational d0 = den.coeff(v);
        for (int k = 0; k <= n; ++k) {
            Rational acc = num.coeff(u + k);
            for (int j = 1; j <= k; ++j) acc -= den.coeff(v + j) * series[static_cast<std::size_t>(k - j)];
            series[static_cast<std::size_t>(k)] = acc / d0;
            if (series[static_cast<std::size_t>(k)] != 0) out.emplace(k + shift, series[static_cast<std::size_t>(k)]);
        }
    }
    LaurentTrunc r(std::move(out), order);
    r.truncated_ = true;
    return r;
}

Rational LaurentTrunc::coeff(int k) const {
    if (k > order_) throw BoundsError("coefficient s^" + std::to_string(k) + " is beyond the truncation order " +
                                      std::to_string(order_));
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

int LaurentTrunc::low() const { return coeffs_.empty() ? clamp_order(static_cast<long>(order_) + 1) : coeffs_.begin()->first; }

LaurentTrunc LaurentTrunc::operator+(const LaurentTrunc& o) const {
    LaurentTrunc out;
    out.order_ = std::min(order_, o.order_);
    out.coeffs_ = coeffs_;
    for (const auto& [k, c] : o.coeffs_) {
        auto [it, inserted] = out.coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.coeffs_.erase(it);
        }
    }
    out.truncated_ = truncated_ || o.truncated_;
    out.clip();
    return out;
}

LaurentTrunc LaurentTrunc::operator-() const {
    LaurentTrunc out(*this);
    for (auto& [k, c] : out.coeffs_) c = -c;
    return out;
}

LaurentTrunc LaurentTrunc::operator-(const LaurentTrunc& o) const { return *this + (-o); }

LaurentTrunc LaurentTrunc::operator*(const LaurentTrunc& o) const {
    LaurentTrunc out;
    out.order_ = clamp_order(std::min(static_cast<long>(order_) + o.low(), static_cast<long>(o.order_) + low()));
    for (const auto& [k1, c1] : coeffs_) {
        for (const auto& [k2, c2] : o.coeffs_) {
            const int k = k1 + k2;
            if (k > out.order_) {
                out.truncated_ = true;
                continue;
            }
            auto [it, inserted] = out.coeffs_.try_emplace(k, c1 * c2);
            if (!inserted) it->second += c1 * c2;
        }
    }
    std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == 0; });
    out.truncated_ = out.truncated_ || truncated_ || o.truncated_;
    return out;
}

LaurentTrunc LaurentTrunc::operator*(const Rational& c) const {
    if (c == 0) {
        LaurentTrunc out;
        out.order_ = order_;
        return out;
    }
    LaurentTrunc out(*this);
    for (auto& [k, v] : out.coeffs_) v *= c;
    return out;
}

LaurentTrunc LaurentTrunc::substitute_power(int m) const {
    if (m < 1) throw InvalidArgumentError("substitution power must be positive");
    LaurentTrunc out;
    out.order_ = is_exact() ? kExact : clamp_order(static_cast<long>(m) * (static_cast<long>(order_) + 1) - 1);
    for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k * m, c);
    out.truncated_ = truncated_;
    return out;
}

LaurentTrunc LaurentTrunc::truncate(int order) const {
    LaurentTrunc out(*this);
    if (order < out.order_) {
        out.order_ = order;
        out.clip();
        out.truncated_ = true;
    }
    return out;
}

bool LaurentTrunc::agrees_with(const LaurentTrunc& o) const {
    const int upto = std::min(order_, o.order_);
    auto a = coeffs_.begin();
    auto b = o.coeffs_.begin();
    while (true) {
        bool a_done = a == coeffs_.end() || a->first > upto;
        bool b_done = b == o.coeffs_.end() || b->first > upto;
        if (a_done || b_done) return a_done && b_done;
        if (a->first != b->first || a->second != b->second) return false;
        ++a;
        ++b;
    }
}

std::string LaurentTrunc::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (k == 0 || a != 1) os << coha::to_string(a) << (k ? "*" : "");
        if (k == 1) os << "s";
        else if (k != 0) os << "s^" << k;
        first = false;
    }
    if (first) os << "0";
    if (!is_exact()) os << " + O(s^" << order_ + 1 << ")";
    return os.str();
}

}  // namespace coha
