#include "coha/coha.hpp"

#include <algorithm>
#include <functional>

#include "coha/error.hpp"

namespace coha {

namespace {

// All size-k subsets of {0..n-1} as increasing index lists, lexicographic.
std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(current.size())); ++i) {
            current.push_back(i);
            rec(i + 1);
            current.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<int> complement(int n, const std::vector<int>& subset) {
    std::vector<int> out;
    for (int i = 0, j = 0; i < n; ++i) {
        if (j < static_cast<int>(subset.size()) && subset[static_cast<std::size_t>(j)] == i) ++j;
        else out.push_back(i);
    }
    return out;
}

// One (d,e)-shuffle: per vertex, the positions taken by the first factor.
struct Shuffle {
    std::vector<std::vector<int>> first;
    std::vector<std::vector<int>> second;
};

std::vector<Shuffle> shuffles(const DimVector& d, const DimVector& e) {
    std::vector<Shuffle> out{Shuffle{}};
    for (std::size_t i = 0; i < d.size(); ++i) {
        const int n = d[i] + e[i];
        std::vector<Shuffle> next;
        for (const auto& base : out) {
            for (auto& s : combinations(n, d[i])) {
                Shuffle sh = base;
                sh.second.push_back(complement(n, s));
                sh.first.push_back(std::move(s));
                next.push_back(std::move(sh));
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

CohaElement coha_mul(const Quiver& q, const CohaElement& f, const CohaElement& g) {
    const DimVector& d = f.dim();
    const DimVector& e = g.dim();
    q.check(d);
    q.check(e);
    const DimVector n = d + e;
    const std::size_t nvars = alphabet_size(n);
    auto var = [&](std::size_t vertex, int nu) { return variable_index(n, vertex, static_cast<std::size_t>(nu)); };

    // sum over shuffles of sign * f(x') g(x'') Delta_1 * (V / Delta_0), V the
    // per-vertex Vandermonde prod_{a<b} (x_b - x_a)
    Polynomial numerator(nvars);
    for (const auto& sh : shuffles(d, e)) {
        std::vector<std::size_t> f_target, g_target;
        for (std::size_t i = 0; i < n.size(); ++i) {
            for (int pos : sh.first[i]) f_target.push_back(var(i, pos));
            for (int pos : sh.second[i]) g_target.push_back(var(i, pos));
        }
        Polynomial term = f.poly().relabel(f_target, nvars) * g.poly().relabel(g_target, nvars);
        if (term.is_zero()) continue;

        Polynomial weight = Polynomial::constant(nvars, 1);
        for (auto [src, dst] : q.arrows())
            for (int mu : sh.first[src])
                for (int nu : sh.second[dst]) weight = weight * Polynomial::difference(nvars, var(dst, nu), var(src, mu));

        int inversions = 0;
        for (std::size_t i = 0; i < n.size(); ++i) {
            for (const auto* block : {&sh.first[i], &sh.second[i]})
                for (std::size_t a = 0; a < block->size(); ++a)
                    for (std::size_t b = a + 1; b < block->size(); ++b)
                        weight = weight * Polynomial::difference(nvars, var(i, (*block)[b]), var(i, (*block)[a]));
            for (int a : sh.second[i])
                for (int b : sh.first[i])
                    if (a < b) ++inversions;
        }
        term = term * weight;
        if (inversions % 2) numerator -= term;
        else numerator += term;
    }

    for (std::size_t i = 0; i < n.size(); ++i)
        for (int a = 0; a < n[i]; ++a)
            for (int b = a + 1; b < n[i]; ++b) numerator = numerator.divide_by_difference(var(i, b), var(i, a));
    return SymPoly(n, std::move(numerator));
}

CohaElement coha_product(const Quiver& q, const std::vector<CohaElement>& factors) {
    if (factors.empty()) throw InvalidArgumentError("empty product");
    CohaElement out = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) out = coha_mul(q, out, factors[k]);
    return out;
}

Bidegree bidegree(const Quiver& q, const CohaElement& f) {
    q.check(f.dim());
    if (f.is_zero()) throw InvalidArgumentError("the zero element has no bidegree");
    if (!f.is_homogeneous()) throw InvalidArgumentError("bidegree of an inhomogeneous element");
    return Bidegree{f.dim(), 2 * f.degree() + euler_form(q, f.dim(), f.dim())};
}

int parity(const Quiver& q, const DimVector& d) {
    int chi = euler_form(q, d, d);
    return ((chi % 2) + 2) % 2;
}

int SignTwist::operator()(const DimVector& d, const DimVector& e) const {
    if (d.size() != matrix_.size() || e.size() != matrix_.size())
        throw IncompatibleError("sign twist and dimension vector sizes differ");
    int acc = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j) acc += matrix_[i][j] * (d[i] % 2) * (e[j] % 2);
    return acc % 2;
}

SignTwist build_sign_twist(const Quiver& q) {
    if (!is_symmetric(q)) throw UnsupportedError("sign twist requires a symmetric quiver");
    const std::size_t n = q.vertex_count();
    std::vector<int> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = parity(q, q.unit(i));
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            int b = euler_form(q, q.unit(i), q.unit(j)) + c[i] * c[j];
            m[i][j] = ((b % 2) + 2) % 2;
        }
    }
    return SignTwist(std::move(m));
}

bool satisfies_sign_rule(const Quiver& q, const SignTwist& psi) {
    const std::size_t n = q.vertex_count();
    if (n >= 16) throw SizeGuardError("too many vertices to check the sign rule exhaustively");
    for (unsigned a = 0; a < (1u << n); ++a) {
        for (unsigned b = 0; b < (1u << n); ++b) {
            DimVector d(n), e(n);
            for (std::size_t i = 0; i < n; ++i) {
                d[i] = static_cast<int>((a >> i) & 1u);
                e[i] = static_cast<int>((b >> i) & 1u);
            }
            int lhs = psi(d, e) + psi(e, d);
            int rhs = euler_form(q, d, e) + parity(q, d) * parity(q, e);
            if ((((lhs - rhs) % 2) + 2) % 2 != 0) return false;
        }
    }
    return true;
}

CohaElement twisted_mul(const Quiver& q, const CohaElement& f, const CohaElement& g, const SignTwist& psi) {
    if (!f.is_homogeneous() || !g.is_homogeneous())
        throw InvalidArgumentError("twisted product needs homogeneous factors");
    CohaElement out = coha_mul(q, f, g);
    return psi(f.dim(), g.dim()) ? -out : out;
}

std::map<int, std::size_t> bigraded_dims(const Quiver& q, const DimVector& d, int k_max) {
    q.check(d);
    const int chi = euler_form(q, d, d);
    std::map<int, std::size_t> out;
    for (int deg = 0; 2 * deg + chi <= k_max; ++deg) {
        std::size_t dim = graded_dimension(d, deg);
        if (dim) out[2 * deg + chi] = dim;
    }
    return out;
}

std::map<int, std::size_t> hn_kernel_dims(const Quiver& q, const Stability& theta, const DimVector& d,
                                          int polydeg_max) {
    std::map<int, std::vector<SymPoly>> spans;
    std::map<std::pair<DimVector, int>, std::vector<SymPoly>> basis_cache;
    auto basis = [&](const DimVector& dim, int deg) -> const std::vector<SymPoly>& {
        auto key = std::make_pair(dim, deg);
        auto it = basis_cache.find(key);
        if (it == basis_cache.end()) it = basis_cache.emplace(key, graded_basis(dim, deg)).first;
        return it->second;
    };

    for (const auto& type : hn_types(q, theta, d)) {
        const auto& parts = type.parts;
        if (parts.size() < 2) continue;
        int shift = 0;  // sum_{j<l} chi(d^j, d^l)
        for (std::size_t j = 0; j < parts.size(); ++j)
            for (std::size_t l = j + 1; l < parts.size(); ++l) shift += euler_form(q, parts[j], parts[l]);
        for (int k = 0; k <= polydeg_max; ++k) {
            const int forced = k + shift;
            if (forced < 0) continue;
            // distribute `forced` over the factors, multiplying prefixes as we go
            std::function<void(std::size_t, int, const SymPoly*)> rec = [&](std::size_t j, int left,
                                                                             const SymPoly* prefix) {
                if (j + 1 == parts.size()) {
                    for (const auto& b : basis(parts[j], left)) {
                        SymPoly prod = coha_mul(q, *prefix, b);
                        if (!prod.is_zero()) spans[k].push_back(std::move(prod));
                    }
                    return;
                }
                for (int a = 0; a <= left; ++a) {
                    for (const auto& b : basis(parts[j], a)) {
                        if (prefix == nullptr) {
                            rec(j + 1, left - a, &b);
                        } else {
                            SymPoly prod = coha_mul(q, *prefix, b);
                            if (!prod.is_zero()) rec(j + 1, left - a, &prod);
                        }
                    }
                }
            };
            rec(0, forced, nullptr);
        }
    }
    std::map<int, std::size_t> out;
    for (int k = 0; k <= polydeg_max; ++k) out[k] = rank_of_span(spans[k], d, k);
    return out;
}

std::map<int, std::size_t> atilde_sst_dims(const DimVector& d, int polydeg_max) {
    if (d.size() != 2) throw IncompatibleError("expected a dimension vector of the affine A1 quiver");
    const int m = d[0], n = d[1];
    std::map<int, std::size_t> out;
    for (int k = 0; k <= polydeg_max; ++k) {
        std::size_t dim = 0;
        if (n == 0) dim = partitions(k, m).size();
        else if (m == 0) dim = partitions(k, n).size();
        else if (m == n) dim = partitions(k, m).size();
        out[k] = dim;
    }
    return out;
}

CohaElement psi0_embed(const std::vector<int>& word) {
    const Quiver q = atilde1();
    if (word.empty()) return SymPoly::one(atilde_dim(0, 0));
    std::vector<CohaElement> factors;
    for (int k : word) {
        if (k < 0) throw InvalidArgumentError("negative index in word");
        Polynomial p(2);
        p.add_term({k, 0}, 1);
        factors.emplace_back(atilde_dim(1, 1), std::move(p));
    }
    return coha_product(q, factors);
}

SymPoly restrict_diagonal(const CohaElement& f) {
    const DimVector& d = f.dim();
    if (d.size() != 2 || d[0] != d[1]) throw InvalidArgumentError("restriction needs a dimension vector m<->m");
    const int m = d[0];
    std::vector<std::size_t> target;
    for (int i = 0; i < m; ++i) target.push_back(static_cast<std::size_t>(i));
    for (int i = 0; i < m; ++i) target.push_back(static_cast<std::size_t>(i));
    return SymPoly(DimVector{m}, f.poly().relabel(target, static_cast<std::size_t>(m)));
}

std::map<int, std::size_t> tensor_factor_dims(const DimVector& d, int k_max) {
    if (d.size() != 2) throw IncompatibleError("expected a dimension vector of the affine A1 quiver");
    const Quiver pt = point_quiver();
    const Quiver loop = loop_quiver();
    std::map<int, std::size_t> out;
    for (int c = 0; c <= std::min(d[0], d[1]); ++c) {
        const int a = d[0] - c, b = d[1] - c;
        auto left = bigraded_dims(pt, DimVector{a}, k_max);
        auto middle = bigraded_dims(loop, DimVector{c}, k_max);
        auto right = bigraded_dims(pt, DimVector{b}, k_max);
        for (auto [k1, n1] : left)
            for (auto [k2, n2] : middle)
                for (auto [k3, n3] : right)
                    if (k1 + k2 + k3 <= k_max) out[k1 + k2 + k3] += n1 * n2 * n3;
    }
    return out;
}

}  // namespace coha
