#include "coha/sympoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "coha/error.hpp"

namespace coha {

std::size_t alphabet_size(const DimVector& d) { return static_cast<std::size_t>(d.total()); }

std::size_t variable_index(const DimVector& d, std::size_t vertex, std::size_t nu) {
    if (vertex >= d.size() || nu >= static_cast<std::size_t>(d[vertex]))
        throw AlphabetError("variable outside the alphabet");
    std::size_t offset = 0;
    for (std::size_t i = 0; i < vertex; ++i) offset += static_cast<std::size_t>(d[i]);
    return offset + nu;
}

bool is_symmetric_under(const Polynomial& p, const DimVector& dim) {
    if (p.nvars() != alphabet_size(dim)) return false;
    std::size_t offset = 0;
    for (std::size_t v = 0; v < dim.size(); ++v) {
        for (int nu = 0; nu + 1 < dim[v]; ++nu) {
            const std::size_t a = offset + static_cast<std::size_t>(nu);
            for (const auto& [m, c] : p.terms()) {
                if (m[a] == m[a + 1]) continue;
                Monomial swapped = m;
                std::swap(swapped[a], swapped[a + 1]);
                if (p.coefficient(swapped) != c) return false;
            }
        }
        offset += static_cast<std::size_t>(dim[v]);
    }
    return true;
}

SymPoly::SymPoly(DimVector dim, Polynomial poly) : dim_(std::move(dim)), poly_(std::move(poly)) {
    if (poly_.nvars() != alphabet_size(dim_))
        throw AlphabetError("polynomial does not live on the alphabet of the dimension vector");
    if (!is_symmetric_under(poly_, dim_)) throw InvalidArgumentError("polynomial is not W_d-symmetric");
}

SymPoly SymPoly::zero(const DimVector& dim) { return SymPoly(dim, Polynomial(alphabet_size(dim))); }

SymPoly SymPoly::one(const DimVector& dim) {
    return SymPoly(dim, Polynomial::constant(alphabet_size(dim), 1));
}

void SymPoly::check_alphabet(const SymPoly& other) const {
    if (dim_ != other.dim_) throw AlphabetError("symmetric polynomials over different alphabets");
}

SymPoly SymPoly::operator+(const SymPoly& other) const {
    check_alphabet(other);
    return SymPoly(dim_, poly_ + other.poly_);
}

SymPoly SymPoly::operator-(const SymPoly& other) const {
    check_alphabet(other);
    return SymPoly(dim_, poly_ - other.poly_);
}

SymPoly SymPoly::operator*(const SymPoly& other) const {
    check_alphabet(other);
    return SymPoly(dim_, poly_ * other.poly_);
}

SymPoly SymPoly::operator*(const Rational& c) const { return SymPoly(dim_, poly_ * c); }

SymPoly SymPoly::operator-() const { return SymPoly(dim_, -poly_); }

namespace {

// Distinct rearrangements of each vertex block of m, combined over all vertices.
std::vector<Monomial> orbit(const Monomial& m, const DimVector& dim) {
    std::vector<Monomial> out{m};
    std::size_t offset = 0;
    for (std::size_t v = 0; v < dim.size(); ++v) {
        const auto len = static_cast<std::size_t>(dim[v]);
        std::vector<int> block(m.begin() + static_cast<long>(offset), m.begin() + static_cast<long>(offset + len));
        std::sort(block.begin(), block.end());
        std::vector<std::vector<int>> perms;
        do {
            perms.push_back(block);
        } while (std::next_permutation(block.begin(), block.end()));
        std::vector<Monomial> next;
        next.reserve(out.size() * perms.size());
        for (const auto& base : out) {
            for (const auto& p : perms) {
                Monomial n = base;
                std::copy(p.begin(), p.end(), n.begin() + static_cast<long>(offset));
                next.push_back(std::move(n));
            }
        }
        out = std::move(next);
        offset += len;
    }
    return out;
}

std::vector<Monomial> dominant_monomials(const DimVector& dim, int polydeg) {
    std::vector<Monomial> out;
    if (polydeg < 0) return out;
    const std::size_t nvars = alphabet_size(dim);
    Monomial current(nvars, 0);
    std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t v, std::size_t offset, int left) {
        if (v == dim.size()) {
            if (left == 0) out.push_back(current);
            return;
        }
        const int len = dim[v];
        for (int share = left; share >= 0; --share) {
            if (len == 0 && share > 0) continue;
            for (const auto& lambda : partitions(share, len)) {
                std::fill(current.begin() + static_cast<long>(offset),
                          current.begin() + static_cast<long>(offset) + len, 0);
                std::copy(lambda.begin(), lambda.end(), current.begin() + static_cast<long>(offset));
                rec(v + 1, offset + static_cast<std::size_t>(len), left - share);
            }
        }
        std::fill(current.begin() + static_cast<long>(offset), current.begin() + static_cast<long>(offset) + len, 0);
    };
    rec(0, 0, polydeg);
    return out;
}

Polynomial orbit_sum(const Monomial& m, const DimVector& dim) {
    Polynomial p(alphabet_size(dim));
    for (const auto& n : orbit(m, dim)) p.add_term(n, 1);
    return p;
}

Monomial padded_block(const DimVector& dim, std::size_t vertex, const Partition& lambda) {
    if (vertex >= dim.size()) throw AlphabetError("vertex outside the alphabet");
    for (int part : lambda)
        if (part < 0) throw InvalidArgumentError("partition with a negative part");
    if (!std::is_sorted(lambda.rbegin(), lambda.rend())) throw InvalidArgumentError("partition must be weakly decreasing");
    std::size_t nonzero = static_cast<std::size_t>(std::count_if(lambda.begin(), lambda.end(), [](int p) { return p > 0; }));
    if (nonzero > static_cast<std::size_t>(dim[vertex]))
        throw InvalidArgumentError("partition has more parts than variables");
    Monomial m(alphabet_size(dim), 0);
    for (std::size_t k = 0; k < nonzero; ++k) m[variable_index(dim, vertex, k)] = lambda[k];
    return m;
}

}  // namespace

SymPoly symmetrize(const Polynomial& p, const DimVector& dim) {
    if (p.nvars() != alphabet_size(dim)) throw AlphabetError("polynomial does not use the d-alphabet");
    Polynomial out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        auto orb = orbit(m, dim);
        Rational share = c / Rational(static_cast<long>(orb.size()));
        for (const auto& n : orb) out.add_term(n, share);
    }
    return SymPoly(dim, std::move(out));
}

std::vector<Partition> partitions(int n, int max_parts, int max_part) {
    std::vector<Partition> out;
    if (n < 0) return out;
    if (max_part < 0 || max_part > n) max_part = n;
    Partition current;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_parts) return;
        for (int p = std::min(left, cap); p >= 1; --p) {
            current.push_back(p);
            rec(left - p, p);
            current.pop_back();
        }
    };
    rec(n, max_part);
    return out;
}

SymPoly monomial_sym(const DimVector& dim, std::size_t vertex, const Partition& lambda) {
    return SymPoly(dim, orbit_sum(padded_block(dim, vertex, lambda), dim));
}

SymPoly elementary_sym(const DimVector& dim, std::size_t vertex, int k) {
    if (vertex >= dim.size() || k < 0 || k > dim[vertex])
        throw InvalidArgumentError("elementary symmetric index out of range");
    return monomial_sym(dim, vertex, Partition(static_cast<std::size_t>(k), 1));
}

SymPoly schur(const DimVector& dim, std::size_t vertex, const Partition& lambda) {
    Monomial lead = padded_block(dim, vertex, lambda);
    const int n = dim[vertex];
    const std::size_t first = n > 0 ? variable_index(dim, vertex, 0) : 0;
    const std::size_t nvars = alphabet_size(dim);
    // alpha = lambda + delta
    std::vector<int> alpha(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) alpha[static_cast<std::size_t>(k)] = lead[first + static_cast<std::size_t>(k)] + (n - 1 - k);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial alternant(nvars);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) ++inversions;
        Monomial m(nvars, 0);
        for (std::size_t k = 0; k < perm.size(); ++k) m[first + static_cast<std::size_t>(perm[k])] = alpha[k];
        alternant.add_term(m, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // divide by prod_{i<j} (x_i - x_j)
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            alternant = alternant.divide_by_difference(first + static_cast<std::size_t>(i), first + static_cast<std::size_t>(j));
    return SymPoly(dim, std::move(alternant));
}

SymPoly monomial_sym(const Partition& lambda, int nvars) { return monomial_sym(DimVector{nvars}, 0, lambda); }
SymPoly elementary_sym(int k, int nvars) { return elementary_sym(DimVector{nvars}, 0, k); }
SymPoly schur(const Partition& lambda, int nvars) { return schur(DimVector{nvars}, 0, lambda); }

std::vector<SymPoly> graded_basis(const DimVector& dim, int polydeg) {
    std::vector<SymPoly> out;
    for (const auto& m : dominant_monomials(dim, polydeg)) out.emplace_back(dim, orbit_sum(m, dim));
    return out;
}

std::size_t graded_dimension(const DimVector& dim, int polydeg) { return dominant_monomials(dim, polydeg).size(); }

std::vector<Rational> basis_coordinates(const SymPoly& f, int polydeg) {
    for (const auto& [m, c] : f.poly().terms())
        if (std::accumulate(m.begin(), m.end(), 0) != polydeg)
            throw InvalidArgumentError("element is not homogeneous of degree " + std::to_string(polydeg));
    std::vector<Rational> out;
    for (const auto& m : dominant_monomials(f.dim(), polydeg)) out.push_back(f.poly().coefficient(m));
    return out;
}

std::size_t rank_of_span(const std::vector<SymPoly>& vectors, const DimVector& dim, int polydeg) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.dim() != dim) throw AlphabetError("span element over a different alphabet");
        rows.push_back(basis_coordinates(v, polydeg));
    }
    return matrix_rank(std::move(rows));
}

}  // namespace coha
