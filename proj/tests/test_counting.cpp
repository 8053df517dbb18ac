#include "doctest.h"

#include "coha/counting.hpp"
#include "coha/dt.hpp"
#include "coha/error.hpp"

using namespace coha;

namespace {

const Stability kTheta{{1, -1}};

// Invertible 2x2 matrices over F_p, counted directly.
long count_gl2(long p) {
    long n = 0;
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c)
                for (long d = 0; d < p; ++d) n += (a * d - b * c) % p != 0;
    return n;
}

QRational closed_form(const Quiver& q, const DimVector& d) {
    const int chi = euler_form(q, d, d);
    QRational out = QRational::s_power(-chi, chi % 2 ? -1 : 1);
    for (int di : d.entries())
        for (int nu = 1; nu <= di; ++nu) out = out / (QRational(1) - QRational::q_power(-nu));
    return out;
}

}  // namespace

TEST_CASE("general linear group counts") {
    CHECK(gl_count(0) == QRational(1));
    CHECK(gl_count(1) == QRational::q_power(1) - QRational(1));
    CHECK(gl_count(2) == (QRational::q_power(2) - QRational(1)) * (QRational::q_power(2) - QRational::q_power(1)));
    for (long p : {2L, 3L}) CHECK(gl_count(2).evaluate_at_q(p) == count_gl2(p));
}

TEST_CASE("naive coefficients") {
    CHECK(naive_coeff(atilde1(), atilde_dim(0, 0)) == QRational(1));
    CHECK(naive_coeff(point_quiver(), DimVector{1}) == QRational::s_power(1, -1) / (QRational::q_power(1) - QRational(1)));
    CHECK(naive_coeff(loop_quiver(), DimVector{1}) == QRational::q_power(1) / (QRational::q_power(1) - QRational(1)));
    for (const Quiver& q : {point_quiver(), loop_quiver(), loop_quiver(2), atilde1()})
        for (const auto& d : dimvectors_up_to(q.vertex_count(), 4)) CHECK(naive_coeff(q, d) == closed_form(q, d));
}

TEST_CASE("semi-stable coefficients") {
    const Quiver a = atilde1();
    CHECK(sst_coeff(a, kTheta, atilde_dim(1, 1)).value == QRational::q_power(1) / (QRational::q_power(1) - QRational(1)));
    CHECK(sst_coeff(a, kTheta, atilde_dim(2, 1)).value.is_zero());
    for (const auto& d : dimvectors_up_to(2, 3))
        if (!d.is_zero()) CHECK(sst_coeff(a, Stability::zero(a), d).value == naive_coeff(a, d));
    CHECK_THROWS_AS(sst_coeff(Quiver({"1", "2"}, ArrowList{{0, 1}}), Stability{{0, 0}}, DimVector{1, 1}), UnsupportedError);
    CHECK_THROWS_AS(sst_coeff(a, kTheta, atilde_dim(0, 0)), EmptyInputError);
    CHECK(sst_point_count_at(a, kTheta, atilde_dim(1, 1), 2) == 2);
}

TEST_CASE("integration series") {
    const Quiver a = atilde1();
    const int D = 3;
    RationalSeries plus = integration_series(a, kTheta, Rational(1), D);
    RationalSeries pt = coha_series_rational(point_quiver(), D);
    for (int m = 0; m <= D; ++m) CHECK(plus.coeff(atilde_dim(m, 0)) == pt.coeff(DimVector{m}).invert_variable());
    CHECK(plus.coeff(atilde_dim(1, 1)).is_zero());

    RationalSeries zero = integration_series(a, kTheta, Rational(0), D);
    RationalSeries loop = coha_series_rational(loop_quiver(), D);
    CHECK(zero.coeff(atilde_dim(1, 1)) == loop.coeff(DimVector{1}).invert_variable());

    RationalSeries empty = integration_series(a, kTheta, Rational(1, 2), D);
    CHECK(empty == RationalSeries::one(2, D));
}

TEST_CASE("brute-force semi-stable counts") {
    const Quiver a = atilde1();
    CHECK(brute_force_sst_count(a, kTheta, atilde_dim(1, 1), 2) == 2);
    CHECK(brute_force_sst_count(a, kTheta, atilde_dim(1, 0), 3) == 1);
    CHECK(brute_force_sst_count(loop_quiver(), Stability{{0}}, DimVector{1}, 2) == 2);
    CHECK(brute_force_sst_count(a, kTheta, atilde_dim(2, 1), 3) == 0);
    // threads do not change the answer
    CHECK(brute_force_sst_count(a, kTheta, atilde_dim(2, 2), 2, 3) == brute_force_sst_count(a, kTheta, atilde_dim(2, 2), 2, 1));
    CHECK_THROWS_AS(brute_force_sst_count(a, kTheta, atilde_dim(3, 3), 2), SizeGuardError);
    CHECK_THROWS_AS(brute_force_sst_count(a, kTheta, atilde_dim(1, 1), 4), InvalidArgumentError);
}

TEST_CASE("brute-force framed stable counts") {
    const Quiver loop = loop_quiver();
    CHECK(brute_force_framed_stable_count(loop, DimVector{1}, DimVector{1}, 2) == 2);
    CHECK(brute_force_framed_stable_count(loop, DimVector{1}, DimVector{2}, 2) == 24);
    CHECK(brute_force_framed_stable_count(loop, DimVector{0}, DimVector{2}, 3) == 0);
    CHECK(brute_force_framed_stable_count(atilde1(), atilde_dim(0, 0), atilde_dim(1, 0), 2) == 0);
}

TEST_CASE("factorization over HN types") {
    for (const Quiver& q : {atilde1(), loop_quiver(2)}) {
        const Stability theta = q.vertex_count() == 2 ? kTheta : Stability{{0}};
        SstCounter counter(q, theta);
        for (const auto& d : dimvectors_up_to(q.vertex_count(), 4))
            if (!d.is_zero()) CHECK(counter.hn_sum(d) == naive_coeff(q, d));
    }
}
