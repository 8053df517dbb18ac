#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "coha/coha.hpp"

namespace coha {

// Polynomial degree -> dimension, for degrees 0..cutoff.
struct GradedDims {
    std::map<int, std::size_t> dims;
    int cutoff = 0;

    std::size_t at(int k) const;
    std::size_t total() const;
    bool operator==(const GradedDims&) const = default;
};

// prod_i e_{q_i}(x_{i,.})^{n_i}, the top Chern classes of the framing bundles.
CohaElement chern_generator(const Quiver& q, const DimVector& n, const DimVector& qdim);

// Spanning set, at polynomial degree k in H_d, of sum_{p+r=d, r!=0} H_p * (e_r^n . H_r).
std::vector<SymPoly> hilb_ideal_span(const Quiver& q, const DimVector& n, const DimVector& d, int k);
GradedDims hilb_ideal_dims(const Quiver& q, const DimVector& n, const DimVector& d, int polydeg_max);
// dim H_d - ideal, degreewise: the cohomology of the non-commutative Hilbert scheme.
GradedDims hilb_module_dims(const Quiver& q, const DimVector& n, const DimVector& d, int polydeg_max);

// Bigraded dimensions at weight d of the free super-commutative algebra on the
// given generators; a generator is odd when its k is odd. Zero entries omitted.
std::map<int, std::size_t> free_supercomm_dims(const std::vector<Bidegree>& generators, const DimVector& d,
                                               int k_max);

// The affine A1 quiver, theta = (1,-1), framing (r <-> s): graded dimensions of
// the semi-stable framed module at d of slope 1, 0 or -1.
GradedDims atilde_framed_dims(int r, int s, const DimVector& d, int polydeg_max);

}  // namespace coha
