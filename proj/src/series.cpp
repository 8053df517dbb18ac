#include "coha/series.hpp"

#include <set>

namespace coha {

bool agrees_with(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    std::set<DimVector> keys;
    for (const auto& [d, c] : a.coeffs()) keys.insert(d);
    for (const auto& [d, c] : b.coeffs()) keys.insert(d);
    const int bound = std::min(a.bound(), b.bound());
    for (const auto& d : keys) {
        if (d.total() > bound) continue;
        if (!a.coeff(d).agrees_with(b.coeff(d))) return false;
    }
    return true;
}

}  // namespace coha
