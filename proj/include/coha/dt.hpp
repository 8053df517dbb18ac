#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coha/quiver.hpp"
#include "coha/series.hpp"

namespace coha {

// P_Q(q,t) through t-total D, each coefficient valid through s^N.
LaurentSeries coha_series(const Quiver& q, int D, int N);
// The same series with exact coefficients in Q(s).
RationalSeries coha_series_rational(const Quiver& q, int D);
// sum_d sum_k (-1)^k dim H_{(d,k)} s^k t^d, from graded basis sizes.
LaurentSeries graded_dims_series(const Quiver& q, int D, int N);

// c_{(d,k)} for total(d) <= D and k <= K. Missing entries are zero.
struct DTTable {
    std::size_t vertex_count = 0;
    int D = 0;
    int K = 0;
    int N = 0;
    std::map<std::pair<DimVector, int>, Rational> entries;

    // Throws BoundsError outside the validity bounds.
    Rational at(const DimVector& d, int k) const;
};

// Reads off the exponents of the product expansion
// P = prod_d prod_k prod_{n>=0} (1 - q^{n+k/2} t^d)^{(-1)^{k-1} c_{(d,k)}}.
DTTable dt_extract(const LaurentSeries& P, int D, int K);

// The product expansion rebuilt from a table, through t-total D and s-order N.
LaurentSeries dt_product_series(const DTTable& table, int N);

// Entries that are not nonnegative integers, one line each; empty means pass.
std::vector<std::string> efimov_check(const DTTable& table);

}  // namespace coha
