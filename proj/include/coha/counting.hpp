#pragma once

#include <map>
#include <optional>

#include "coha/qrational.hpp"
#include "coha/quiver.hpp"
#include "coha/series.hpp"

namespace coha {

// value = (-s)^{chi(d,d)} #R_d^{sst}(F_q) / #G_d(F_q), q = s^2.
struct CountResult {
    DimVector d;
    QRational value;
};

// #GL_m(F_q) = prod_{nu<m} (q^m - q^nu).
QRational gl_count(int m);
// #G_d(F_q) = prod_i #GL_{d_i}(F_q).
QRational group_count(const DimVector& d);
// Dimension of R_d: sum over arrows i->j of d_i d_j.
int rep_dimension(const Quiver& q, const DimVector& d);

// (-s)^{chi(d,d)} q^{dim R_d} / #G_d, the weighted count of all of R_d.
QRational naive_coeff(const Quiver& q, const DimVector& d);

// Solves naive_coeff(d) = sum over HN types of prod_k A_{d^k} for the A_d,
// memoized. Symmetric quivers only. Not thread-safe.
class SstCounter {
public:
    SstCounter(Quiver q, Stability theta);

    const Quiver& quiver() const { return q_; }
    const Stability& stability() const { return theta_; }

    const QRational& coeff(const DimVector& d);
    // A_d * (-s)^{-chi(d,d)} * #G_d, i.e. #R_d^{sst}(F_q); even in s.
    QRational point_count(const DimVector& d);
    // Sum over HN types of prod_k A_{d^k}; equals naive_coeff(d) when the recursion is right.
    QRational hn_sum(const DimVector& d);

private:
    Quiver q_;
    Stability theta_;
    std::map<DimVector, QRational> memo_;
};

CountResult sst_coeff(const Quiver& q, const Stability& theta, const DimVector& d);

// #R_d^{sst}(F_q) evaluated at q = p (the count is a function of q alone).
Integer sst_point_count_at(const Quiver& q, const Stability& theta, const DimVector& d, long p);

// The image of the characteristic function of the semi-stable locus of slope
// mu (or of everything when mu is empty) under the integration map, through
// total degree D.
RationalSeries integration_series(const Quiver& q, const Stability& theta, const std::optional<Rational>& mu, int D);

// Independent counts by enumerating all representations over F_p. Guarded to
// at most 10 matrix entries (framing vectors included).
Integer brute_force_sst_count(const Quiver& q, const Stability& theta, const DimVector& d, long p,
                              unsigned threads = 1);
// Framed representations (M, f) with no proper subrepresentation containing im f.
Integer brute_force_framed_stable_count(const Quiver& q, const DimVector& n, const DimVector& d, long p,
                                        unsigned threads = 1);

}  // namespace coha
