#pragma once

#include <map>
#include <type_traits>
#include <vector>

#include "coha/error.hpp"
#include "coha/laurent.hpp"
#include "coha/qrational.hpp"
#include "coha/quiver.hpp"

namespace coha {

// Formal power series in t_i (one per vertex), truncated at total degree
// bound(). Coefficients are LaurentTrunc (expansions in s) or QRational
// (exact elements of Q(s)). Keys missing from the map are exact zeros.
template <class Coeff>
class TSeries {
public:
    TSeries() = default;
    TSeries(std::size_t vertex_count, int bound) : vertex_count_(vertex_count), bound_(bound) {
        if (bound < 0) throw InvalidArgumentError("negative truncation bound");
    }

    static TSeries one(std::size_t vertex_count, int bound) {
        TSeries s(vertex_count, bound);
        s.set(DimVector(vertex_count), Coeff(Rational(1)));
        return s;
    }

    std::size_t vertex_count() const { return vertex_count_; }
    int bound() const { return bound_; }
    bool truncated() const { return truncated_; }
    const std::map<DimVector, Coeff>& coeffs() const { return coeffs_; }

    Coeff coeff(const DimVector& d) const {
        check_key(d);
        auto it = coeffs_.find(d);
        return it == coeffs_.end() ? Coeff() : it->second;
    }

    void set(const DimVector& d, Coeff c) {
        check_key(d);
        if (c.is_zero()) {
            // a truncated zero still carries information about its order
            if constexpr (std::is_same_v<Coeff, LaurentTrunc>) {
                if (!c.is_exact()) {
                    coeffs_.insert_or_assign(d, std::move(c));
                    return;
                }
            }
            coeffs_.erase(d);
            return;
        }
        coeffs_.insert_or_assign(d, std::move(c));
    }

    TSeries operator+(const TSeries& o) const {
        check_compatible(o);
        TSeries out(*this);
        for (const auto& [d, c] : o.coeffs_) out.set(d, out.coeff(d) + c);
        out.truncated_ = truncated_ || o.truncated_;
        return out;
    }

    TSeries operator-(const TSeries& o) const {
        check_compatible(o);
        TSeries out(*this);
        for (const auto& [d, c] : o.coeffs_) out.set(d, out.coeff(d) - c);
        out.truncated_ = truncated_ || o.truncated_;
        return out;
    }

    TSeries operator*(const Rational& c) const {
        TSeries out(vertex_count_, bound_);
        for (const auto& [d, v] : coeffs_) out.set(d, v * Coeff(c));
        out.truncated_ = truncated_;
        return out;
    }

    TSeries operator*(const TSeries& o) const {
        check_compatible(o);
        TSeries out(vertex_count_, bound_);
        out.truncated_ = truncated_ || o.truncated_;
        for (const auto& [d, a] : coeffs_) {
            for (const auto& [e, b] : o.coeffs_) {
                if (d.total() + e.total() > bound_) {
                    out.truncated_ = true;
                    continue;
                }
                DimVector de = d + e;
                out.set(de, out.coeff(de) + a * b);
            }
        }
        return out;
    }

    bool operator==(const TSeries& o) const {
        return vertex_count_ == o.vertex_count_ && bound_ == o.bound_ && coeffs_ == o.coeffs_;
    }

private:
    void check_key(const DimVector& d) const {
        if (d.size() != vertex_count_) throw IncompatibleError("series key has the wrong number of vertices");
        if (d.total() > bound_) throw BoundsError("series coefficient beyond the truncation bound");
    }
    void check_compatible(const TSeries& o) const {
        if (vertex_count_ != o.vertex_count_) throw IncompatibleError("series over different variable sets");
        if (bound_ != o.bound_) throw BoundsError("series with different truncation bounds");
    }

    std::size_t vertex_count_ = 0;
    int bound_ = 0;
    bool truncated_ = false;
    std::map<DimVector, Coeff> coeffs_;
};

using LaurentSeries = TSeries<LaurentTrunc>;
using RationalSeries = TSeries<QRational>;

namespace detail {

template <class Coeff>
bool is_exact_one(const Coeff& c) {
    if constexpr (std::is_same_v<Coeff, LaurentTrunc>) {
        return c.coeffs().size() == 1 && c.coeffs().begin()->first == 0 && c.coeffs().begin()->second == 1;
    } else {
        return c == Coeff(Rational(1));
    }
}

}  // namespace detail

template <class Coeff>
TSeries<Coeff> series_mul(const TSeries<Coeff>& a, const TSeries<Coeff>& b) {
    return a * b;
}

// log(a) for a with constant term exactly 1.
template <class Coeff>
TSeries<Coeff> series_log(const TSeries<Coeff>& a) {
    const DimVector zero(a.vertex_count());
    if (!detail::is_exact_one(a.coeff(zero))) throw InvalidArgumentError("log of a series whose constant term is not 1");
    TSeries<Coeff> x = a;
    x.set(zero, Coeff());
    TSeries<Coeff> out(a.vertex_count(), a.bound());
    TSeries<Coeff> power = x;
    for (int j = 1; j <= a.bound(); ++j) {
        Rational sign = j % 2 ? Rational(1) : Rational(-1);
        out = out + power * (sign / Rational(j));
        power = power * x;
    }
    return out;
}

// exp(a) for a with zero constant term.
template <class Coeff>
TSeries<Coeff> series_exp(const TSeries<Coeff>& a) {
    const DimVector zero(a.vertex_count());
    if (!a.coeff(zero).is_zero()) throw InvalidArgumentError("exp of a series with nonzero constant term");
    TSeries<Coeff> out = TSeries<Coeff>::one(a.vertex_count(), a.bound());
    TSeries<Coeff> power = a;
    Rational factorial = 1;
    for (int j = 1; j <= a.bound(); ++j) {
        factorial *= j;
        out = out + power * (Rational(1) / factorial);
        power = power * a;
    }
    return out;
}

// Coefficientwise agreement within the known orders of both series.
bool agrees_with(const LaurentSeries& a, const LaurentSeries& b);

}  // namespace coha
