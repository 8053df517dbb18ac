#include "doctest.h"

#include "coha/error.hpp"
#include "coha/framed.hpp"

using namespace coha;

namespace {

// Top coefficient of prod_i (1 + x_i T) in n variables, raised to a power.
Polynomial top_chern_oracle(int n, int power) {
    Polynomial prod = Polynomial::constant(static_cast<std::size_t>(n) + 1, 1);  // last variable is T
    for (int i = 0; i < n; ++i)
        prod = prod * (Polynomial::constant(static_cast<std::size_t>(n) + 1, 1) +
                       Polynomial::variable(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(i)) *
                           Polynomial::variable(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n)));
    Polynomial top(static_cast<std::size_t>(n));
    for (const auto& [m, c] : prod.terms())
        if (m.back() == n) top.add_term(Monomial(m.begin(), m.end() - 1), c);
    return top.pow(power);
}

}  // namespace

TEST_CASE("Chern generators") {
    CHECK(chern_generator(loop_quiver(), DimVector{3}, DimVector{2}).poly() == top_chern_oracle(2, 3));
    CHECK(chern_generator(atilde1(), atilde_dim(0, 0), atilde_dim(2, 1)) == SymPoly::one(atilde_dim(2, 1)));
    Polynomial xy(2);
    xy.add_term({2, 3}, 1);
    CHECK(chern_generator(atilde1(), atilde_dim(2, 3), atilde_dim(1, 1)).poly() == xy);
    CHECK_THROWS_AS(chern_generator(loop_quiver(), DimVector{1}, DimVector{0}), EmptyInputError);
}

TEST_CASE("Hilbert scheme ideals") {
    GradedDims pt = hilb_ideal_dims(point_quiver(), DimVector{2}, DimVector{1}, 3);
    CHECK(pt.at(0) == 0);
    CHECK(pt.at(1) == 0);
    CHECK(pt.at(2) == 1);
    for (auto [k, v] : hilb_ideal_dims(atilde1(), atilde_dim(1, 2), atilde_dim(0, 0), 3).dims) CHECK(v == 0);
    GradedDims loop = hilb_ideal_dims(loop_quiver(), DimVector{1}, DimVector{1}, 4);
    CHECK(loop.at(0) == 0);
    for (int k = 1; k <= 4; ++k) CHECK(loop.at(k) == 1);
    CHECK_THROWS_AS(loop.at(5), BoundsError);
}

TEST_CASE("Hilbert scheme cohomology") {
    CHECK(hilb_module_dims(point_quiver(), DimVector{2}, DimVector{1}, 4).total() == 2);
    GradedDims loop = hilb_module_dims(loop_quiver(), DimVector{2}, DimVector{2}, 4);
    CHECK(loop.at(0) == 1);
    CHECK(loop.at(1) == 1);
    CHECK(loop.at(2) == 1);
    CHECK(loop.at(3) == 0);
    CHECK(hilb_module_dims(point_quiver(), DimVector{2}, DimVector{3}, 6).total() == 0);
    CHECK(hilb_module_dims(point_quiver(), DimVector{4}, DimVector{2}, 5).total() == 6);
}

TEST_CASE("free super-commutative algebras") {
    std::vector<Bidegree> gens = {{atilde_dim(1, 0), 1}, {atilde_dim(1, 1), 0}, {atilde_dim(1, 1), 2}, {atilde_dim(0, 1), 1}};
    CHECK(free_supercomm_dims(gens, atilde_dim(1, 1), 0) == std::map<int, std::size_t>{{0, 1}});
    CHECK(free_supercomm_dims({}, DimVector{}, 0) == std::map<int, std::size_t>{{0, 1}});
    std::vector<Bidegree> psi = {{DimVector{1}, 1}, {DimVector{1}, 3}};
    CHECK(free_supercomm_dims(psi, DimVector{2}, 10) == std::map<int, std::size_t>{{4, 1}});
    // odd generators square to zero, even ones do not
    CHECK(free_supercomm_dims({{DimVector{1}, 1}}, DimVector{2}, 10).empty());
    CHECK(free_supercomm_dims({{DimVector{1}, 0}}, DimVector{3}, 10) == std::map<int, std::size_t>{{0, 1}});
    CHECK_THROWS(free_supercomm_dims({{DimVector{0}, 2}}, DimVector{1}, 4));
}

TEST_CASE("framed modules on affine A1") {
    GradedDims zero = atilde_framed_dims(1, 1, atilde_dim(1, 1), 3);
    CHECK(zero.at(0) == 1);
    CHECK(zero.at(1) == 1);
    CHECK(zero.at(2) == 0);
    CHECK(atilde_framed_dims(1, 0, atilde_dim(0, 1), 3).total() == 0);
    CHECK(atilde_framed_dims(2, 0, atilde_dim(1, 0), 3).total() == 2);
    CHECK_THROWS(atilde_framed_dims(1, 1, atilde_dim(2, 1), 3));
}

TEST_CASE("more framing never shrinks the module") {
    for (int d = 1; d <= 3; ++d)
        for (int n = 1; n <= 2; ++n) {
            auto small = hilb_module_dims(loop_quiver(), DimVector{n}, DimVector{d}, 4);
            auto big = hilb_module_dims(loop_quiver(), DimVector{n + 1}, DimVector{d}, 4);
            for (int k = 0; k <= 4; ++k) CHECK(small.at(k) <= big.at(k));
        }
}
