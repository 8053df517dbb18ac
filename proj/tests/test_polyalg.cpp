#include <random>

#include "doctest.h"

#include "coha/error.hpp"
#include "coha/laurent.hpp"
#include "coha/polynomial.hpp"
#include "coha/qrational.hpp"
#include "coha/series.hpp"
#include "coha/sympoly.hpp"

using namespace coha;

namespace {

Polynomial mono(std::size_t nvars, Monomial m, const Rational& c = 1) {
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
}

Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, int max_deg, int terms) {
    std::uniform_int_distribution<int> e(0, max_deg), c(-5, 5);
    Polynomial p(nvars);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        for (auto& x : m) x = e(rng);
        p.add_term(m, c(rng));
    }
    return p;
}

// Coordinates of a symmetric polynomial in the Schur basis, peeling off
// leading dominant monomials (Schur functions are unitriangular over m_lambda).
std::map<Partition, Rational> schur_expand(SymPoly f, int nvars) {
    std::map<Partition, Rational> out;
    while (!f.is_zero()) {
        // lexicographically largest exponent vector is dominant
        const auto& [m, c] = *f.poly().terms().rbegin();
        Partition lambda;
        for (int x : m)
            if (x) lambda.push_back(x);
        out[lambda] += c;
        f = f - schur(lambda, nvars) * c;
    }
    return out;
}

}  // namespace

TEST_CASE("polynomial ring operations") {
    Polynomial x1 = Polynomial::variable(2, 0), x2 = Polynomial::variable(2, 1);
    Polynomial s = x1 + x2;
    CHECK(s * s == mono(2, {2, 0}) + mono(2, {1, 1}, 2) + mono(2, {0, 2}));
    CHECK(s * Polynomial::constant(2, 1) == s);
    CHECK((s - s).is_zero());
    CHECK(s.pow(0) == Polynomial::constant(2, 1));
    CHECK_THROWS(x1 + Polynomial::variable(3, 0));
}

TEST_CASE("exact division") {
    Polynomial x1 = Polynomial::variable(2, 0), x2 = Polynomial::variable(2, 1);
    CHECK(exact_divide(x2 * x2 - x1 * x1, x2 - x1) == x2 + x1);
    CHECK(exact_divide(x2 - x1, x1 - x2) == Polynomial::constant(2, -1));
    CHECK_THROWS_AS(exact_divide(x1 + Polynomial::constant(2, 1), x2), DivisionError);
    CHECK_THROWS_AS(exact_divide(x1, Polynomial(2)), InvalidArgumentError);
    CHECK((x2 * x2 - x1 * x1).divide_by_difference(1, 0) == x1 + x2);
    CHECK_THROWS_AS((x2 * x2 + x1).divide_by_difference(1, 0), DivisionError);

    std::mt19937_64 rng(2024);
    for (int t = 0; t < 100; ++t) {
        Polynomial f = random_poly(rng, 3, 3, 4);
        Polynomial g = random_poly(rng, 3, 2, 3);
        if (g.is_zero()) g = Polynomial::constant(3, 1);
        CHECK(exact_divide(f * g, g) == f);
    }
}

TEST_CASE("symmetric polynomials reject asymmetric bodies") {
    CHECK_THROWS(SymPoly(DimVector{2}, Polynomial::variable(2, 0)));
    CHECK_THROWS_AS(SymPoly::one(DimVector{1}) + SymPoly::one(DimVector{2}), AlphabetError);
    SymPoly m1 = monomial_sym({1}, 2);
    CHECK(m1 * m1 == monomial_sym({2}, 2) + monomial_sym({1, 1}, 2) * Rational(2));
}

TEST_CASE("symmetrize is the orbit average") {
    const DimVector d{2};
    CHECK(symmetrize(Polynomial::variable(2, 0), d).poly() == (mono(2, {1, 0}) + mono(2, {0, 1})) * Rational(1, 2));
    SymPoly e = elementary_sym(1, 2);
    CHECK(symmetrize(e.poly(), d) == e);
    Polynomial p = mono(2, {2, 1}) + mono(2, {1, 0});
    Polynomial expected = (mono(2, {2, 1}) + mono(2, {1, 2})) * Rational(1, 2) + (mono(2, {1, 0}) + mono(2, {0, 1})) * Rational(1, 2);
    CHECK(symmetrize(p, d).poly() == expected);
    // two vertices: permutations act per vertex only
    const DimVector d2{1, 2};
    CHECK(symmetrize(mono(3, {1, 1, 0}), d2).poly() == (mono(3, {1, 1, 0}) + mono(3, {1, 0, 1})) * Rational(1, 2));
}

TEST_CASE("classical symmetric functions") {
    CHECK(schur({}, 3) == SymPoly::one(DimVector{3}));
    CHECK(schur({1}, 2).poly() == mono(2, {1, 0}) + mono(2, {0, 1}));
    CHECK(schur({2, 1}, 2).poly() == mono(2, {2, 1}) + mono(2, {1, 2}));
    CHECK_THROWS(schur({1, 1, 1}, 2));
    CHECK(monomial_sym({1, 1}, 2).poly() == mono(2, {1, 1}));
    CHECK(elementary_sym(2, 2).poly() == mono(2, {1, 1}));
    CHECK(monomial_sym({2, 1}, 3).poly().size() == 6);
    CHECK_THROWS(elementary_sym(3, 2));
    CHECK_THROWS(monomial_sym({1, 1, 1}, 2));
}

TEST_CASE("graded bases") {
    CHECK(graded_basis(DimVector{2}, 2).size() == 2);
    CHECK(graded_basis(DimVector{2, 1}, 0).size() == 1);
    CHECK(graded_basis(DimVector{1, 1}, 1).size() == 2);
    CHECK(graded_basis(DimVector{0}, 0).size() == 1);
    CHECK(graded_basis(DimVector{0}, 1).empty());
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 5; ++k) {
            auto basis = graded_basis(DimVector{n, 1}, k);
            CHECK(rank_of_span(basis, DimVector{n, 1}, k) == basis.size());
        }
}

TEST_CASE("generating series of the graded basis sizes") {
    // coefficients of prod_{nu=1}^{d} (1 - q^nu)^{-1}
    const int K = 12;
    for (int d = 0; d <= 4; ++d) {
        std::vector<long> series(K + 1, 0);
        series[0] = 1;
        for (int nu = 1; nu <= d; ++nu)
            for (int k = nu; k <= K; ++k) series[static_cast<std::size_t>(k)] += series[static_cast<std::size_t>(k - nu)];
        for (int k = 0; k <= K; ++k)
            CHECK(graded_dimension(DimVector{d}, k) == static_cast<std::size_t>(series[static_cast<std::size_t>(k)]));
    }
}

TEST_CASE("rank of a span") {
    const DimVector d{2};
    SymPoly f = monomial_sym({2}, 2);
    CHECK(rank_of_span({f, f * Rational(2)}, d, 2) == 1);
    CHECK(rank_of_span({}, d, 2) == 0);
    CHECK(rank_of_span({f, monomial_sym({1, 1}, 2), f + monomial_sym({1, 1}, 2)}, d, 2) == 2);
    CHECK_THROWS(rank_of_span({monomial_sym({1}, 2)}, d, 2));
}

TEST_CASE("Littlewood-Richardson coefficients are nonnegative integers") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<Partition> parts;
        for (int size = 0; size <= 3; ++size)
            for (auto& p : partitions(size, n)) parts.push_back(p);
        for (const auto& lambda : parts)
            for (const auto& mu : parts)
                for (const auto& [nu, c] : schur_expand(schur(lambda, n) * schur(mu, n), n)) {
                    CHECK(is_integer(c));
                    CHECK(c > 0);
                }
    }
}

TEST_CASE("univariate rational functions") {
    QRational q = QRational::q_power(1);
    QRational f = (q - QRational(1)) / (q * q - QRational(1));
    CHECK(f == QRational(1) / (q + QRational(1)));
    CHECK(f.is_even());
    CHECK(f.evaluate_at_q(2) == Rational(1, 3));
    CHECK_FALSE(QRational::s_power(1).is_even());
    CHECK(QRational::s_power(-3) * QRational::s_power(3) == QRational(1));
    CHECK(QRational::s_power(2).invert_variable() == QRational::s_power(-2));
    CHECK_THROWS(QRational(1) / QRational());
}

TEST_CASE("truncated Laurent series") {
    LaurentTrunc g = LaurentTrunc::geometric(2, 6);
    CHECK(g.coeff(6) == 1);
    CHECK(g.coeff(5) == 0);
    CHECK_THROWS_AS(g.coeff(7), BoundsError);
    LaurentTrunc prod = g * (LaurentTrunc(Rational(1)) - LaurentTrunc::s_power(2));
    CHECK(prod.agrees_with(LaurentTrunc(Rational(1))));
    CHECK(prod.order() == 6);
    LaurentTrunc shifted = LaurentTrunc::s_power(-3) * g;
    CHECK(shifted.order() == 3);
    CHECK(shifted.low() == -3);
    LaurentTrunc e = LaurentTrunc::expand(QRational(1) / (QRational(1) - QRational::q_power(1)), 8);
    CHECK(e.agrees_with(LaurentTrunc::geometric(2, 8)));
    CHECK(g.substitute_power(3).order() == 20);
}

TEST_CASE("truncated series ring") {
    using S = RationalSeries;
    S one_plus_t = S::one(1, 4), one_minus_t = S::one(1, 4);
    one_plus_t.set(DimVector{1}, QRational(1));
    one_minus_t.set(DimVector{1}, QRational(-1));
    S prod = one_plus_t * one_minus_t;
    CHECK(prod.coeff(DimVector{2}) == QRational(-1));
    CHECK(prod.coeff(DimVector{1}).is_zero());

    S inv = S::one(1, 5);
    for (int m = 1; m <= 5; ++m) inv.set(DimVector{m}, QRational(1));
    S log = series_log(inv);
    for (int m = 1; m <= 5; ++m) CHECK(log.coeff(DimVector{m}) == QRational(Rational(1, m)));
    CHECK(series_exp(log) == inv);
    CHECK_THROWS_AS(series_log(one_plus_t * Rational(2)), InvalidArgumentError);
    CHECK_THROWS_AS(one_plus_t.coeff(DimVector{5}), BoundsError);
}
