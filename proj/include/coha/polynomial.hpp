#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "coha/rational.hpp"

namespace coha {

using Monomial = std::vector<int>;

// Multivariate polynomial in a fixed number of variables with exact rational
// coefficients. Terms are kept in a std::map so iteration order (and hence
// every printed or hashed form) is deterministic. Zero coefficients are never
// stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    // x_b - x_a
    static Polynomial difference(std::size_t nvars, std::size_t b, std::size_t a);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;

    // -1 for the zero polynomial.
    int degree() const;
    // True for zero and for polynomials whose terms all have the same degree.
    bool is_homogeneous() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& other) const = default;

    // Sends variable v to variable target[v] of a ring with new_nvars
    // variables; exponents add when several variables share a target.
    Polynomial relabel(const std::vector<std::size_t>& target, std::size_t new_nvars) const;

    // Exact quotient by (x_b - x_a) through synthetic division in x_b.
    // Throws DivisionError on a nonzero remainder.
    Polynomial divide_by_difference(std::size_t b, std::size_t a) const;

private:
    void check_same_ring(const Polynomial& other) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

// Exact quotient f / g by lexicographic leading-term division.
// Throws DivisionError when g does not divide f, InvalidArgumentError when g = 0.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// Rank over Q by Gaussian elimination.
std::size_t matrix_rank(std::vector<std::vector<Rational>> rows);

}  // namespace coha
