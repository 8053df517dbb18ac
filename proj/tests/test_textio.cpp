#include "doctest.h"

#include "coha/error.hpp"
#include "coha/textio.hpp"

using namespace coha;

TEST_CASE("quiver JSON") {
    Quiver q = parse_quiver(load_json(R"({"vertices": ["a","b"], "arrows": [{"from":"a","to":"b"}, {"from":"b","to":"a"}]})"));
    CHECK(q == atilde1());
    CHECK(parse_quiver(quiver_to_json(q)) == q);
    CHECK_THROWS_AS(load_json("{\"vertices\": [\"a\""), ParseError);
    CHECK_THROWS_AS(parse_quiver(load_json(R"({"arrows": []})")), ParseError);
    CHECK_THROWS_AS(parse_quiver(load_json(R"({"vertices": ["a"], "arrows": [{"from":"a","to":"z"}]})")), IncompatibleError);
    CHECK_THROWS_AS(load_json("/nonexistent/quiver.json"), ParseError);
}

TEST_CASE("dimension vectors and stability") {
    const Quiver q = atilde1();
    DimVector d = parse_dimvector(load_json(R"({"b": 1, "a": 2})"), q);
    CHECK(d == atilde_dim(2, 1));
    CHECK(parse_dimvector(dimvector_to_json(d, q), q) == d);
    CHECK_THROWS_AS(parse_dimvector(load_json(R"({"a": 1})"), q), IncompatibleError);
    CHECK_THROWS_AS(parse_dimvector(load_json(R"({"a": 1, "c": 2})"), q), IncompatibleError);
    CHECK(parse_dimvector(load_json("3"), loop_quiver()) == DimVector{3});
    Stability theta = parse_stability(load_json(R"({"a": "1/2", "b": -1})"), q);
    CHECK(theta.theta == std::vector<Rational>{Rational(1, 2), Rational(-1)});
}

TEST_CASE("polynomial text") {
    const Quiver q = atilde1();
    const DimVector d = atilde_dim(2, 1);
    SymPoly f = parse_sympoly("3/2 * x[a,1]^2 * x[b,1] + 3/2*x[a,2]^2*x[b,1] - 1", q, d);
    CHECK(f.degree() == 3);
    CHECK(parse_sympoly(format_sympoly(f, q), q, d) == f);
    CHECK(format_sympoly(SymPoly::zero(d), q) == "0");
    CHECK(format_sympoly(parse_sympoly("x[a,1] + x[a,2]", q, d), q) == "x[a,1] + x[a,2]");
    CHECK_THROWS_AS(parse_sympoly("x[c,1]", q, d), ParseError);
    CHECK_THROWS_AS(parse_sympoly("x[b,2]", q, d), ParseError);
    CHECK_THROWS_AS(parse_sympoly("x[a,1] x[a,2]", q, d), ParseError);
    CHECK_THROWS(parse_sympoly("x[a,1]", q, d));  // not symmetric
}
