#include "doctest.h"

#include "coha/dt.hpp"
#include "coha/error.hpp"

using namespace coha;

TEST_CASE("generating series coefficients") {
    LaurentSeries pt = coha_series(point_quiver(), 3, 12);
    for (int k = 0; k <= 12; ++k) CHECK(pt.coeff(DimVector{1}).coeff(k) == (k % 2 ? -1 : 0));
    LaurentSeries loop = coha_series(loop_quiver(), 3, 12);
    for (int k = 0; k <= 12; ++k) CHECK(loop.coeff(DimVector{1}).coeff(k) == (k % 2 ? 0 : 1));
    CHECK(pt.coeff(DimVector{0}) == LaurentTrunc(Rational(1)));
    LaurentSeries two = coha_series(loop_quiver(2), 3, 12);
    for (int d = 1; d <= 3; ++d) CHECK(two.coeff(DimVector{d}).low() == -d * d);
    CHECK_THROWS_AS(coha_series(Quiver({"1", "2"}, ArrowList{{0, 1}}), 2, 4), UnsupportedError);
}

TEST_CASE("two derivations of the series agree") {
    for (const Quiver& q : {point_quiver(), loop_quiver(), atilde1(), loop_quiver(2)}) {
        CHECK(coha_series(q, 3, 12) == graded_dims_series(q, 3, 12));
        CHECK(graded_dims_series(q, 3, 12).coeff(q.zero()) == LaurentTrunc(Rational(1)));
    }
}

TEST_CASE("rational and truncated series agree") {
    RationalSeries exact = coha_series_rational(atilde1(), 3);
    LaurentSeries trunc = coha_series(atilde1(), 3, 15);
    for (const auto& d : dimvectors_up_to(2, 3)) CHECK(LaurentTrunc::expand(exact.coeff(d), 15) .agrees_with(trunc.coeff(d)));
}

TEST_CASE("DT invariants of the fixtures") {
    DTTable pt = dt_extract(coha_series(point_quiver(), 3, 20), 3, 12);
    CHECK(pt.entries.size() == 1);
    CHECK(pt.at(DimVector{1}, 1) == 1);
    CHECK(pt.at(DimVector{2}, 3) == 0);
    CHECK_THROWS_AS(pt.at(DimVector{4}, 1), BoundsError);
    CHECK_THROWS_AS(pt.at(DimVector{1}, 13), BoundsError);

    DTTable loop = dt_extract(coha_series(loop_quiver(), 3, 20), 3, 12);
    CHECK(loop.entries.size() == 1);
    CHECK(loop.at(DimVector{1}, 0) == 1);

    DTTable a = dt_extract(coha_series(atilde1(), 3, 20), 3, 12);
    CHECK(a.entries.size() == 3);
    CHECK(a.at(atilde_dim(1, 0), 1) == 1);
    CHECK(a.at(atilde_dim(1, 1), 0) == 1);
    CHECK(a.at(atilde_dim(0, 1), 1) == 1);
}

TEST_CASE("insufficient precision is reported") {
    CHECK_THROWS_AS(dt_extract(coha_series(loop_quiver(2), 3, 6), 3, 12), BoundsError);
    CHECK_THROWS_AS(dt_extract(coha_series(point_quiver(), 2, 20), 3, 4), BoundsError);
}

TEST_CASE("Efimov check") {
    for (int loops : {2, 3}) {
        DTTable t = dt_extract(coha_series(loop_quiver(loops), 3, 60), 3, 12);
        CHECK(efimov_check(t).empty());
        CHECK(t.entries == dt_extract(coha_series(loop_quiver(loops), 3, 64), 3, 12).entries);
    }
    DTTable bad;
    bad.vertex_count = 1;
    bad.D = 1;
    bad.K = 2;
    bad.entries[{DimVector{1}, 1}] = Rational(1, 2);
    bad.entries[{DimVector{1}, 2}] = Rational(-1);
    auto report = efimov_check(bad);
    REQUIRE(report.size() == 2);
    CHECK(report[0].find("1/2") != std::string::npos);
}

TEST_CASE("round trips") {
    for (const Quiver& q : {point_quiver(), loop_quiver(), atilde1(), loop_quiver(2)}) {
        LaurentSeries P = coha_series(q, 3, 30);
        CHECK(agrees_with(series_exp(series_log(P)), P));
        CHECK(agrees_with(dt_product_series(dt_extract(P, 3, 12), 30), P));
    }
    CHECK_THROWS_AS(series_exp(coha_series(point_quiver(), 2, 4)), InvalidArgumentError);
}
