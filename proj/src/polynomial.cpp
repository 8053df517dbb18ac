#include "coha/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "coha/error.hpp"

namespace coha {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw InvalidArgumentError("variable index out of range");
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.add_term(m, 1);
    return p;
}

Polynomial Polynomial::difference(std::size_t nvars, std::size_t b, std::size_t a) {
    return variable(nvars, b) - variable(nvars, a);
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars_) throw AlphabetError("monomial has wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, std::accumulate(m.begin(), m.end(), 0));
    return deg;
}

bool Polynomial::is_homogeneous() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        int d = std::accumulate(m.begin(), m.end(), 0);
        if (deg >= 0 && d != deg) return false;
        deg = d;
    }
    return true;
}

void Polynomial::check_same_ring(const Polynomial& other) const {
    if (nvars_ != other.nvars_) throw AlphabetError("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_same_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_same_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out(*this);
    out += other;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out(*this);
    out -= other;
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_ring(other);
    Polynomial out(nvars_);
    Monomial m(nvars_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : other.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
            out.add_term(m, c1 * c2);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial out(*this);
    out *= c;
    return out;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw InvalidArgumentError("negative polynomial power");
    Polynomial out = constant(nvars_, 1);
    for (int k = 0; k < e; ++k) out = out * *this;
    return out;
}

Polynomial Polynomial::relabel(const std::vector<std::size_t>& target, std::size_t new_nvars) const {
    if (target.size() != nvars_) throw AlphabetError("relabelling map has wrong size");
    Polynomial out(new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial n(new_nvars, 0);
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (m[v] == 0) continue;
            if (target[v] >= new_nvars) throw AlphabetError("relabelling target out of range");
            n[target[v]] += m[v];
        }
        out.add_term(n, c);
    }
    return out;
}

Polynomial Polynomial::divide_by_difference(std::size_t b, std::size_t a) const {
    if (b >= nvars_ || a >= nvars_ || a == b) throw InvalidArgumentError("bad linear divisor");
    int top = 0;
    for (const auto& [m, c] : terms_) top = std::max(top, m[b]);
    // coefficients of x_b^k, as polynomials free of x_b
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(top) + 1, Polynomial(nvars_));
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest[b] = 0;
        coeffs[static_cast<std::size_t>(m[b])].add_term(rest, c);
    }
    auto times_xa = [&](const Polynomial& p) {
        Polynomial out(nvars_);
        for (const auto& [m, c] : p.terms_) {
            Monomial n = m;
            ++n[a];
            out.add_term(n, c);
        }
        return out;
    };
    Polynomial quotient(nvars_);
    Polynomial carry(nvars_);  // q_k, running from the top
    for (std::size_t k = coeffs.size(); k-- > 1;) {
        carry = coeffs[k] + times_xa(carry);
        for (const auto& [m, c] : carry.terms_) {
            Monomial n = m;
            n[b] = static_cast<int>(k - 1);
            quotient.add_term(n, c);
        }
    }
    Polynomial remainder = coeffs[0] + times_xa(carry);
    if (!remainder.is_zero()) throw DivisionError("nonzero remainder dividing by a linear factor");
    return quotient;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw InvalidArgumentError("division by the zero polynomial");
    if (f.nvars() != g.nvars()) throw AlphabetError("polynomials live in different rings");
    const auto& [lead_m, lead_c] = *g.terms().rbegin();
    Polynomial remainder = f;
    Polynomial quotient(f.nvars());
    while (!remainder.is_zero()) {
        const auto& [m, c] = *remainder.terms().rbegin();
        Monomial shift(f.nvars());
        for (std::size_t i = 0; i < shift.size(); ++i) {
            shift[i] = m[i] - lead_m[i];
            if (shift[i] < 0) throw DivisionError("exact division failed: nonzero remainder");
        }
        Polynomial step(f.nvars());
        step.add_term(shift, c / lead_c);
        quotient += step;
        remainder -= step * g;
    }
    return quotient;
}

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational factor = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace coha
