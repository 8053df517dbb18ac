#include "coha/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "coha/error.hpp"

namespace coha {

DimVector::DimVector(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int v : entries_)
        if (v < 0) throw InvalidArgumentError("dimension vector entries must be nonnegative");
}

int DimVector::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool DimVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v == 0; });
}

bool DimVector::fits_in(const DimVector& other) const {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i] > other.entries_[i]) return false;
    return true;
}

DimVector DimVector::operator+(const DimVector& other) const {
    if (size() != other.size()) throw IncompatibleError("dimension vectors of different length");
    DimVector out(*this);
    for (std::size_t i = 0; i < size(); ++i) out.entries_[i] += other.entries_[i];
    return out;
}

DimVector DimVector::operator-(const DimVector& other) const {
    if (!other.fits_in(*this)) throw InvalidArgumentError("dimension vector difference would be negative");
    DimVector out(*this);
    for (std::size_t i = 0; i < size(); ++i) out.entries_[i] -= other.entries_[i];
    return out;
}

DimVector DimVector::operator*(int k) const {
    DimVector out(*this);
    for (auto& v : out.entries_) v *= k;
    return out;
}

std::ostream& operator<<(std::ostream& os, const DimVector& d) {
    os << '(';
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    return os << ')';
}

Quiver::Quiver(std::vector<std::string> vertices, ArrowList arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::set<std::string> seen;
    for (const auto& v : vertices_)
        if (!seen.insert(v).second) throw IncompatibleError("duplicate vertex '" + v + "'");
    const std::size_t n = vertices_.size();
    adjacency_.assign(n * n, 0);
    for (auto [s, t] : arrows_) {
        if (s >= n || t >= n) throw IncompatibleError("arrow endpoint out of range");
        ++adjacency_[s * n + t];
    }
}

namespace {

ArrowList resolve(const std::vector<std::string>& vertices,
                  const std::vector<std::pair<std::string, std::string>>& arrows) {
    ArrowList out;
    auto find = [&](const std::string& name) {
        auto it = std::find(vertices.begin(), vertices.end(), name);
        if (it == vertices.end()) throw IncompatibleError("arrow endpoint '" + name + "' is not a vertex");
        return static_cast<std::size_t>(it - vertices.begin());
    };
    for (const auto& [s, t] : arrows) out.emplace_back(find(s), find(t));
    return out;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, std::vector<std::pair<std::string, std::string>> arrows)
    : Quiver(vertices, resolve(vertices, arrows)) {}

std::size_t Quiver::index_of(const std::string& vertex) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), vertex);
    if (it == vertices_.end()) throw IncompatibleError("unknown vertex '" + vertex + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
}

DimVector Quiver::unit(std::size_t i) const {
    DimVector d(vertex_count());
    d[i] = 1;
    return d;
}

void Quiver::check(const DimVector& d) const {
    if (d.size() != vertex_count())
        throw IncompatibleError("dimension vector has " + std::to_string(d.size()) + " entries, quiver has " +
                                std::to_string(vertex_count()) + " vertices");
}

Rational Stability::operator()(const DimVector& d) const {
    if (d.size() != theta.size()) throw IncompatibleError("stability and dimension vector sizes differ");
    Rational sum = 0;
    for (std::size_t i = 0; i < d.size(); ++i) sum += theta[i] * d[i];
    return sum;
}

Quiver point_quiver() { return Quiver({"1"}, ArrowList{}); }

Quiver loop_quiver(int loops) {
    return Quiver({"1"}, ArrowList(static_cast<std::size_t>(loops), {0, 0}));
}

Quiver atilde1() { return Quiver({"a", "b"}, ArrowList{{0, 1}, {1, 0}}); }

DimVector atilde_dim(int m, int n) { return DimVector{m, n}; }

int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    q.check(d);
    q.check(e);
    int out = 0;
    for (std::size_t i = 0; i < d.size(); ++i) out += d[i] * e[i];
    for (auto [s, t] : q.arrows()) out -= d[s] * e[t];
    return out;
}

bool is_symmetric(const Quiver& q) {
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < q.vertex_count(); ++j)
            if (q.arrow_count(i, j) != q.arrow_count(j, i)) return false;
    return true;
}

Rational slope(const Stability& theta, const DimVector& d) {
    if (d.is_zero()) throw UndefinedSlopeError("slope of the zero dimension vector is undefined");
    return theta(d) / Rational(d.total());
}

Quiver framed_quiver(const Quiver& q, const DimVector& n) {
    q.check(n);
    std::string name = "inf";
    while (std::find(q.vertices().begin(), q.vertices().end(), name) != q.vertices().end()) name += "'";
    auto vertices = q.vertices();
    vertices.push_back(name);
    ArrowList arrows = q.arrows();
    const std::size_t inf = q.vertex_count();
    for (std::size_t i = 0; i < n.size(); ++i)
        for (int k = 0; k < n[i]; ++k) arrows.emplace_back(inf, i);
    return Quiver(std::move(vertices), std::move(arrows));
}

std::vector<DimVector> sub_dimvectors(const DimVector& d) {
    std::vector<DimVector> out;
    DimVector e(d.size());
    while (true) {
        out.push_back(e);
        // odometer with the last coordinate fastest
        std::size_t i = d.size();
        while (i > 0) {
            --i;
            if (e[i] < d[i]) {
                ++e[i];
                for (std::size_t j = i + 1; j < d.size(); ++j) e[j] = 0;
                break;
            }
            if (i == 0) return out;
        }
        if (d.size() == 0) return out;
    }
}

namespace {

void extend_hn(const Stability& theta, const DimVector& rest, const Rational* prev_slope,
               std::vector<DimVector>& parts, std::vector<HNType>& out) {
    if (rest.is_zero()) {
        out.push_back(HNType{parts});
        return;
    }
    for (const auto& e : sub_dimvectors(rest)) {
        if (e.is_zero()) continue;
        Rational s = slope(theta, e);
        if (prev_slope && !(s < *prev_slope)) continue;
        parts.push_back(e);
        extend_hn(theta, rest - e, &s, parts, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<HNType> hn_types(const Quiver& q, const Stability& theta, const DimVector& d) {
    q.check(d);
    if (theta.theta.size() != q.vertex_count()) throw IncompatibleError("stability is not keyed by the quiver");
    if (d.is_zero()) throw EmptyInputError("HN types of the zero dimension vector");
    std::vector<HNType> out;
    std::vector<DimVector> parts;
    extend_hn(theta, d, nullptr, parts, out);
    auto flat = [](const HNType& t) {
        std::vector<int> v;
        for (const auto& p : t.parts) v.insert(v.end(), p.entries().begin(), p.entries().end());
        return v;
    };
    std::sort(out.begin(), out.end(), [&](const HNType& a, const HNType& b) { return flat(a) < flat(b); });
    return out;
}

std::vector<DimVector> dimvectors_up_to(std::size_t vertex_count, int max_total) {
    std::vector<DimVector> out;
    DimVector box(std::vector<int>(vertex_count, std::max(max_total, 0)));
    for (auto& d : sub_dimvectors(box))
        if (d.total() <= max_total) out.push_back(d);
    std::stable_sort(out.begin(), out.end(),
                     [](const DimVector& a, const DimVector& b) { return a.total() < b.total(); });
    return out;
}

}  // namespace coha
