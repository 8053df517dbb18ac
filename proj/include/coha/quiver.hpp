#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "coha/rational.hpp"

namespace coha {

// Nonnegative integer per vertex, indexed by the quiver's declaration order.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::size_t n) : entries_(n, 0) {}
    explicit DimVector(std::vector<int> entries);
    DimVector(std::initializer_list<int> entries) : DimVector(std::vector<int>(entries)) {}

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    int total() const;
    bool is_zero() const;
    // componentwise <=
    bool fits_in(const DimVector& other) const;

    DimVector operator+(const DimVector& other) const;
    DimVector operator-(const DimVector& other) const;
    DimVector operator*(int k) const;

    auto operator<=>(const DimVector&) const = default;

private:
    std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const DimVector& d);

using ArrowList = std::vector<std::pair<std::size_t, std::size_t>>;

class Quiver {
public:
    Quiver() = default;
    // Throws IncompatibleError on duplicate vertex names or dangling arrows.
    Quiver(std::vector<std::string> vertices, std::vector<std::pair<std::string, std::string>> arrows);
    Quiver(std::vector<std::string> vertices, ArrowList arrows);

    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const ArrowList& arrows() const { return arrows_; }
    std::size_t index_of(const std::string& vertex) const;
    // Number of arrows i -> j.
    int arrow_count(std::size_t i, std::size_t j) const { return adjacency_[i * vertices_.size() + j]; }

    DimVector zero() const { return DimVector(vertex_count()); }
    DimVector unit(std::size_t i) const;
    // Throws IncompatibleError unless d is keyed by this quiver's vertices.
    void check(const DimVector& d) const;

    bool operator==(const Quiver& other) const {
        return vertices_ == other.vertices_ && arrows_ == other.arrows_;
    }

private:
    std::vector<std::string> vertices_;
    ArrowList arrows_;
    std::vector<int> adjacency_;
};

// Linear functional theta on dimension vectors.
struct Stability {
    std::vector<Rational> theta;

    static Stability zero(const Quiver& q) { return Stability{std::vector<Rational>(q.vertex_count(), 0)}; }
    Rational operator()(const DimVector& d) const;
};

struct HNType {
    std::vector<DimVector> parts;
    bool operator==(const HNType&) const = default;
};

// Standard fixtures.
Quiver point_quiver();
Quiver loop_quiver(int loops = 1);
// Two vertices a, b with one arrow each way.
Quiver atilde1();
DimVector atilde_dim(int m, int n);

int euler_form(const Quiver& q, const DimVector& d, const DimVector& e);
bool is_symmetric(const Quiver& q);
Rational slope(const Stability& theta, const DimVector& d);

// Adds a vertex (named "inf" unless taken) with n_i arrows into vertex i.
Quiver framed_quiver(const Quiver& q, const DimVector& n);

// All e with 0 <= e <= d, lexicographic.
std::vector<DimVector> sub_dimvectors(const DimVector& d);

// All ordered decompositions of d into nonzero parts with strictly decreasing
// slopes, including (d) itself; sorted lexicographically on the flattened parts.
std::vector<HNType> hn_types(const Quiver& q, const Stability& theta, const DimVector& d);

// All d with total(d) <= max_total, ordered by total then lexicographically.
std::vector<DimVector> dimvectors_up_to(std::size_t vertex_count, int max_total);

}  // namespace coha
