#pragma once

#include <map>
#include <vector>

#include "coha/quiver.hpp"
#include "coha/sympoly.hpp"

namespace coha {

// An element of H_d: a W_d-symmetric polynomial over the d-alphabets. The
// dimension vector is the body's alphabet.
using CohaElement = SymPoly;

struct Bidegree {
    DimVector d;
    int k = 0;
    bool operator==(const Bidegree&) const = default;
};

// The shuffle product of f in H_d and g in H_e, landing in H_{d+e}.
CohaElement coha_mul(const Quiver& q, const CohaElement& f, const CohaElement& g);
// Left-to-right product of a nonempty list.
CohaElement coha_product(const Quiver& q, const std::vector<CohaElement>& factors);

// (d, 2n + chi(d,d)) for a nonzero body homogeneous of degree n.
Bidegree bidegree(const Quiver& q, const CohaElement& f);

// Parity of a dimension vector, chi(d,d) mod 2.
int parity(const Quiver& q, const DimVector& d);

// Bilinear form over Z/2 with psi(d,e) + psi(e,d) = chi(d,e) + eps(d)eps(e).
class SignTwist {
public:
    SignTwist() = default;
    explicit SignTwist(std::vector<std::vector<int>> matrix) : matrix_(std::move(matrix)) {}
    int operator()(const DimVector& d, const DimVector& e) const;
    const std::vector<std::vector<int>>& matrix() const { return matrix_; }

private:
    std::vector<std::vector<int>> matrix_;
};

// Requires a symmetric quiver (UnsupportedError otherwise).
SignTwist build_sign_twist(const Quiver& q);
// Checks the defining congruence on all pairs of 0/1 vectors.
bool satisfies_sign_rule(const Quiver& q, const SignTwist& psi);

// (-1)^{psi(d,e)} f*g; f and g must be homogeneous.
CohaElement twisted_mul(const Quiver& q, const CohaElement& f, const CohaElement& g, const SignTwist& psi);

// k -> dim H_{(d,k)} for k <= k_max (k = 2 * polynomial degree + chi(d,d)); zero entries omitted.
std::map<int, std::size_t> bigraded_dims(const Quiver& q, const DimVector& d, int k_max);

// Per polynomial degree k <= polydeg_max: dimension of the span of all
// products A_{d^1} * ... * A_{d^r} over HN types of d with r >= 2.
std::map<int, std::size_t> hn_kernel_dims(const Quiver& q, const Stability& theta, const DimVector& d,
                                          int polydeg_max);

// --- the affine A1 quiver with theta = (1,-1) ---

// Graded dimensions of the semi-stable part of H_{m<->n}.
std::map<int, std::size_t> atilde_sst_dims(const DimVector& d, int polydeg_max);

// Psi0(phi_{k1}) * ... * Psi0(phi_{km}) with Psi0(phi_k) = x^k in H_{1<->1}.
CohaElement psi0_embed(const std::vector<int>& word);

// x_i, y_i -> t_i on H_{m<->m}; the result lives on a one-vertex alphabet of size m.
SymPoly restrict_diagonal(const CohaElement& f);

// Bigraded dimensions (indexed by k) at weight d of H(pt) (x) H(loop) (x) H(pt)
// under (a, c, b) -> (a + c <-> c + b).
std::map<int, std::size_t> tensor_factor_dims(const DimVector& d, int k_max);

}  // namespace coha
