#pragma once

#include <cstddef>
#include <vector>

#include "coha/polynomial.hpp"
#include "coha/quiver.hpp"

namespace coha {

using Partition = std::vector<int>;

// Variable layout for a dimension vector: vertex i carries d_i variables
// x_{i,1..d_i}, flattened in vertex order.
std::size_t alphabet_size(const DimVector& d);
std::size_t variable_index(const DimVector& d, std::size_t vertex, std::size_t nu);

// A polynomial over the d-alphabets that is invariant under W_d, the product of
// the symmetric groups permuting each vertex's variables. The invariant is
// checked on construction (adjacent transpositions generate W_d).
class SymPoly {
public:
    SymPoly() = default;
    SymPoly(DimVector dim, Polynomial poly);

    static SymPoly zero(const DimVector& dim);
    static SymPoly one(const DimVector& dim);

    const DimVector& dim() const { return dim_; }
    const Polynomial& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    int degree() const { return poly_.degree(); }
    bool is_homogeneous() const { return poly_.is_homogeneous(); }

    SymPoly operator+(const SymPoly& other) const;
    SymPoly operator-(const SymPoly& other) const;
    SymPoly operator*(const SymPoly& other) const;
    SymPoly operator*(const Rational& c) const;
    SymPoly operator-() const;
    bool operator==(const SymPoly& other) const = default;

private:
    void check_alphabet(const SymPoly& other) const;

    DimVector dim_;
    Polynomial poly_;
};

bool is_symmetric_under(const Polynomial& p, const DimVector& dim);

// Average of p over W_d.
SymPoly symmetrize(const Polynomial& p, const DimVector& dim);

// Partitions of n into at most max_parts parts, each at most max_part
// (max_part < 0 means unbounded), in reverse lexicographic order.
std::vector<Partition> partitions(int n, int max_parts, int max_part = -1);

SymPoly monomial_sym(const DimVector& dim, std::size_t vertex, const Partition& lambda);
SymPoly elementary_sym(const DimVector& dim, std::size_t vertex, int k);
// Bialternant a_{lambda+delta} / a_delta on one vertex's variables.
SymPoly schur(const DimVector& dim, std::size_t vertex, const Partition& lambda);

// Single-vertex conveniences.
SymPoly monomial_sym(const Partition& lambda, int nvars);
SymPoly elementary_sym(int k, int nvars);
SymPoly schur(const Partition& lambda, int nvars);

// Products of monomial symmetric functions prod_i m_{lambda^i}(x_{i,.}) with
// sum |lambda^i| = polydeg. The coordinate of a symmetric polynomial on such
// an element is its coefficient at the dominant monomial x^{lambda}.
std::vector<SymPoly> graded_basis(const DimVector& dim, int polydeg);
std::size_t graded_dimension(const DimVector& dim, int polydeg);

// Coordinates in graded_basis(dim, polydeg).
std::vector<Rational> basis_coordinates(const SymPoly& f, int polydeg);

// Rank of the span of homogeneous degree-polydeg elements of H_dim.
std::size_t rank_of_span(const std::vector<SymPoly>& vectors, const DimVector& dim, int polydeg);

}  // namespace coha
