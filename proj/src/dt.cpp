#include "coha/dt.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "coha/error.hpp"
#include "coha/sympoly.hpp"

namespace coha {

namespace {

void require_symmetric(const Quiver& q) {
    if (!is_symmetric(q)) throw UnsupportedError("the generating series is defined here for symmetric quivers");
}

Rational sign(int k) { return k % 2 ? Rational(-1) : Rational(1); }

// (1 - q^m)^{-1} = sum_j s^{2mj}
LaurentTrunc inverse_one_minus_q(int m, int order) { return LaurentTrunc::geometric(2 * m, std::max(order, 0)); }

}  // namespace

LaurentSeries coha_series(const Quiver& q, int D, int N) {
    require_symmetric(q);
    if (N < 0) throw InvalidArgumentError("negative s-order");
    LaurentSeries out = LaurentSeries::one(q.vertex_count(), D);
    for (const auto& d : dimvectors_up_to(q.vertex_count(), D)) {
        if (d.is_zero()) continue;
        const int chi = euler_form(q, d, d);
        LaurentTrunc c = LaurentTrunc::s_power(chi, sign(chi));
        for (int di : d.entries())
            for (int nu = 1; nu <= di; ++nu) c *= inverse_one_minus_q(nu, N - chi);
        out.set(d, c.truncate(N));
    }
    return out;
}

RationalSeries coha_series_rational(const Quiver& q, int D) {
    require_symmetric(q);
    RationalSeries out = RationalSeries::one(q.vertex_count(), D);
    for (const auto& d : dimvectors_up_to(q.vertex_count(), D)) {
        if (d.is_zero()) continue;
        const int chi = euler_form(q, d, d);
        QRational c = QRational::s_power(chi, sign(chi));
        for (int di : d.entries())
            for (int nu = 1; nu <= di; ++nu) c = c / (QRational(1) - QRational::q_power(nu));
        out.set(d, c);
    }
    return out;
}

LaurentSeries graded_dims_series(const Quiver& q, int D, int N) {
    require_symmetric(q);
    LaurentSeries out = LaurentSeries::one(q.vertex_count(), D);
    for (const auto& d : dimvectors_up_to(q.vertex_count(), D)) {
        if (d.is_zero()) continue;
        const int chi = euler_form(q, d, d);
        std::map<int, Rational> c;
        for (int deg = 0; 2 * deg + chi <= N; ++deg) {
            const int k = 2 * deg + chi;
            const auto dim = graded_dimension(d, deg);
            if (dim) c.emplace(k, sign(k) * Rational(static_cast<long>(dim)));
        }
        out.set(d, LaurentTrunc(std::move(c), N));
    }
    return out;
}

Rational DTTable::at(const DimVector& d, int k) const {
    if (d.size() != vertex_count) throw IncompatibleError("dimension vector does not match the table");
    if (d.total() > D || k > K)
        throw BoundsError("DT entry outside the computed range (D=" + std::to_string(D) + ", K=" + std::to_string(K) + ")");
    auto it = entries.find({d, k});
    return it == entries.end() ? Rational(0) : it->second;
}

DTTable dt_extract(const LaurentSeries& P, int D, int K) {
    if (D > P.bound()) throw BoundsError("requested t-degree beyond the series bound");
    const std::size_t n = P.vertex_count();
    LaurentSeries L = series_log(P);

    DTTable table;
    table.vertex_count = n;
    table.D = D;
    table.K = K;
    table.N = LaurentTrunc::kExact;
    std::map<DimVector, LaurentTrunc> F;

    for (const auto& e : dimvectors_up_to(n, D)) {
        if (e.is_zero()) continue;
        LaurentTrunc rest = -L.coeff(e);
        int g = 0;
        for (int x : e.entries()) g = std::gcd(g, x);
        for (int m = 2; m <= g; ++m) {
            if (g % m) continue;
            DimVector d = e;
            for (std::size_t i = 0; i < n; ++i) d[i] = e[i] / m;
            const LaurentTrunc& Fd = F.at(d);
            if (Fd.is_zero() && Fd.is_exact()) continue;
            const LaurentTrunc lifted = Fd.substitute_power(m);
            const int depth = std::max(rest.order(), lifted.order()) - std::min(lifted.low(), 0);
            rest -= lifted * inverse_one_minus_q(m, std::min(depth, LaurentTrunc::kExact - 1)) * (Rational(1) / m);
        }
        LaurentTrunc Fe = rest * (LaurentTrunc(Rational(1)) - LaurentTrunc::s_power(2));
        if (Fe.order() < K)
            throw BoundsError("series precision too low: F at " + [&] {
                std::ostringstream os;
                os << e;
                return os.str();
            }() + " is known through s^" + std::to_string(Fe.order()) + ", need s^" + std::to_string(K));
        table.N = std::min(table.N, Fe.order());
        for (const auto& [k, c] : Fe.coeffs()) {
            if (k > K) break;
            table.entries.emplace(std::make_pair(e, k), sign(k - 1) * c);
        }
        F.emplace(e, std::move(Fe));
    }
    if (table.N == LaurentTrunc::kExact) table.N = K;
    return table;
}

LaurentSeries dt_product_series(const DTTable& table, int N) {
    const std::size_t n = table.vertex_count;
    const int D = table.D;
    // every F_d is known through s^K only
    std::map<DimVector, LaurentTrunc> F;
    for (const auto& d : dimvectors_up_to(n, D))
        if (!d.is_zero()) F.emplace(d, LaurentTrunc(std::map<int, Rational>{}, table.K));
    for (const auto& [key, c] : table.entries) F.at(key.first) += LaurentTrunc::s_power(key.second, sign(key.second - 1) * c);

    LaurentSeries log_series(n, D);
    for (const auto& [d, f] : F) {
        for (int m = 1; m * d.total() <= D; ++m) {
            const LaurentTrunc lifted = f.substitute_power(m);
            LaurentTrunc term = -(lifted * inverse_one_minus_q(m, N - std::min(lifted.low(), 0)) * (Rational(1) / m));
            const DimVector md = d * m;
            log_series.set(md, log_series.coeff(md) + term);
        }
    }
    LaurentSeries out = series_exp(log_series);
    LaurentSeries truncated(n, D);
    for (const auto& [d, c] : out.coeffs()) truncated.set(d, c.truncate(N));
    truncated.set(DimVector(n), out.coeff(DimVector(n)));
    return truncated;
}

std::vector<std::string> efimov_check(const DTTable& table) {
    std::vector<std::string> failures;
    for (const auto& [key, c] : table.entries) {
        if (is_integer(c) && c >= 0) continue;
        std::ostringstream os;
        os << "c(" << key.first << ", " << key.second << ") = " << to_string(c);
        os << (is_integer(c) ? " is negative" : " is not an integer");
        failures.push_back(os.str());
    }
    return failures;
}

}  // namespace coha
