#include "coha/framed.hpp"

#include <functional>

#include "coha/error.hpp"

namespace coha {

std::size_t GradedDims::at(int k) const {
    if (k < 0 || k > cutoff) throw BoundsError("degree outside the computed range");
    auto it = dims.find(k);
    return it == dims.end() ? 0 : it->second;
}

std::size_t GradedDims::total() const {
    std::size_t sum = 0;
    for (const auto& [k, v] : dims) sum += v;
    return sum;
}

CohaElement chern_generator(const Quiver& q, const DimVector& n, const DimVector& qdim) {
    q.check(n);
    q.check(qdim);
    if (qdim.is_zero()) throw EmptyInputError("Chern generator at the zero dimension vector");
    SymPoly out = SymPoly::one(qdim);
    for (std::size_t i = 0; i < qdim.size(); ++i) {
        const SymPoly e = elementary_sym(qdim, i, qdim[i]);
        for (int j = 0; j < n[i]; ++j) out = out * e;
    }
    return out;
}

std::vector<SymPoly> hilb_ideal_span(const Quiver& q, const DimVector& n, const DimVector& d, int k) {
    q.check(n);
    q.check(d);
    std::vector<SymPoly> span;
    for (const auto& r : sub_dimvectors(d)) {
        if (r.is_zero()) continue;
        const DimVector p = d - r;
        int framing_degree = 0;
        for (std::size_t i = 0; i < r.size(); ++i) framing_degree += n[i] * r[i];
        const int free_degree = k - framing_degree + euler_form(q, p, r);
        if (free_degree < 0) continue;
        const SymPoly e = chern_generator(q, n, r);
        for (int a = 0; a <= free_degree; ++a) {
            const auto left = graded_basis(p, a);
            for (const auto& br : graded_basis(r, free_degree - a)) {
                const SymPoly right = e * br;
                for (const auto& bp : left) {
                    SymPoly prod = coha_mul(q, bp, right);
                    if (!prod.is_zero()) span.push_back(std::move(prod));
                }
            }
        }
    }
    return span;
}

GradedDims hilb_ideal_dims(const Quiver& q, const DimVector& n, const DimVector& d, int polydeg_max) {
    GradedDims out;
    out.cutoff = polydeg_max;
    for (int k = 0; k <= polydeg_max; ++k) out.dims[k] = rank_of_span(hilb_ideal_span(q, n, d, k), d, k);
    return out;
}

GradedDims hilb_module_dims(const Quiver& q, const DimVector& n, const DimVector& d, int polydeg_max) {
    GradedDims ideal = hilb_ideal_dims(q, n, d, polydeg_max);
    GradedDims out;
    out.cutoff = polydeg_max;
    for (int k = 0; k <= polydeg_max; ++k) out.dims[k] = graded_dimension(d, k) - ideal.dims[k];
    return out;
}

std::map<int, std::size_t> free_supercomm_dims(const std::vector<Bidegree>& generators, const DimVector& d,
                                               int k_max) {
    for (const auto& g : generators) {
        if (g.d.size() != d.size()) throw IncompatibleError("generator weight has the wrong number of vertices");
        if (g.d.is_zero()) throw InvalidArgumentError("generators of weight zero give infinite dimensions");
    }
    std::map<int, std::size_t> out;
    std::function<void(std::size_t, const DimVector&, int)> rec = [&](std::size_t idx, const DimVector& left, int k) {
        if (idx == generators.size()) {
            if (left.is_zero() && k <= k_max) ++out[k];
            return;
        }
        const Bidegree& g = generators[idx];
        const bool odd = ((g.k % 2) + 2) % 2 == 1;
        DimVector rest = left;
        int kk = k;
        for (int power = 0;; ++power) {
            rec(idx + 1, rest, kk);
            if (odd && power == 1) break;
            if (!g.d.fits_in(rest)) break;
            rest = rest - g.d;
            kk += g.k;
        }
    };
    rec(0, d, 0);
    return out;
}

GradedDims atilde_framed_dims(int r, int s, const DimVector& d, int polydeg_max) {
    if (d.size() != 2) throw IncompatibleError("expected a dimension vector of the affine A1 quiver");
    if (r < 0 || s < 0) throw InvalidArgumentError("negative framing");
    const int m = d[0], k = d[1];
    if (k == 0) return hilb_module_dims(point_quiver(), DimVector{r}, DimVector{m}, polydeg_max);
    if (m == 0) return hilb_module_dims(point_quiver(), DimVector{s}, DimVector{k}, polydeg_max);
    if (m == k) return hilb_module_dims(loop_quiver(), DimVector{r + s}, DimVector{m}, polydeg_max);
    throw InvalidArgumentError("slope must be 1, 0 or -1");
}

}  // namespace coha
