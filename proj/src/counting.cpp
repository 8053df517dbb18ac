#include "coha/counting.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "coha/error.hpp"

namespace coha {

QRational gl_count(int m) {
    if (m < 0) throw InvalidArgumentError("negative matrix size");
    QRational out(1);
    for (int nu = 0; nu < m; ++nu) out *= QRational::q_power(m) - QRational::q_power(nu);
    return out;
}

QRational group_count(const DimVector& d) {
    QRational out(1);
    for (int di : d.entries()) out *= gl_count(di);
    return out;
}

int rep_dimension(const Quiver& q, const DimVector& d) {
    q.check(d);
    int dim = 0;
    for (auto [i, j] : q.arrows()) dim += d[i] * d[j];
    return dim;
}

QRational naive_coeff(const Quiver& q, const DimVector& d) {
    const int chi = euler_form(q, d, d);
    return QRational::s_power(chi, chi % 2 ? -1 : 1) * QRational::q_power(rep_dimension(q, d)) / group_count(d);
}

SstCounter::SstCounter(Quiver q, Stability theta) : q_(std::move(q)), theta_(std::move(theta)) {
    if (!is_symmetric(q_)) throw UnsupportedError("semi-stable counting via the integration map needs a symmetric quiver");
    if (theta_.theta.size() != q_.vertex_count()) throw IncompatibleError("stability and quiver sizes differ");
}

QRational SstCounter::hn_sum(const DimVector& d) {
    QRational total;
    for (const auto& type : hn_types(q_, theta_, d)) {
        QRational prod(1);
        for (const auto& part : type.parts) prod *= coeff(part);
        total += prod;
    }
    return total;
}

const QRational& SstCounter::coeff(const DimVector& d) {
    q_.check(d);
    if (auto it = memo_.find(d); it != memo_.end()) return it->second;
    QRational value = d.is_zero() ? QRational(1) : naive_coeff(q_, d);
    if (!d.is_zero()) {
        for (const auto& type : hn_types(q_, theta_, d)) {
            if (type.parts.size() < 2) continue;
            QRational prod(1);
            for (const auto& part : type.parts) prod *= coeff(part);
            value -= prod;
        }
    }
    return memo_.emplace(d, std::move(value)).first->second;
}

QRational SstCounter::point_count(const DimVector& d) {
    const int chi = euler_form(q_, d, d);
    QRational out = coeff(d) * QRational::s_power(-chi, chi % 2 ? -1 : 1) * group_count(d);
    if (!out.is_even()) throw Error("semi-stable point count is not a function of q");
    return out;
}

CountResult sst_coeff(const Quiver& q, const Stability& theta, const DimVector& d) {
    if (d.is_zero()) throw EmptyInputError("semi-stable count of the zero dimension vector");
    SstCounter counter(q, theta);
    return CountResult{d, counter.coeff(d)};
}

Integer sst_point_count_at(const Quiver& q, const Stability& theta, const DimVector& d, long p) {
    SstCounter counter(q, theta);
    Rational v = counter.point_count(d).evaluate_at_q(Rational(p));
    if (!is_integer(v)) throw Error("point count evaluated to a non-integer");
    return v.get_num();
}

RationalSeries integration_series(const Quiver& q, const Stability& theta, const std::optional<Rational>& mu,
                                  int D) {
    SstCounter counter(q, theta);
    RationalSeries out = RationalSeries::one(q.vertex_count(), D);
    for (const auto& d : dimvectors_up_to(q.vertex_count(), D)) {
        if (d.is_zero()) continue;
        if (!mu) {
            out.set(d, naive_coeff(q, d));
        } else if (slope(theta, d) == *mu) {
            out.set(d, counter.coeff(d));
        }
    }
    return out;
}

namespace {

// Vectors of F_p^n are encoded as integers in base p, coordinate 0 least significant.
struct Subspace {
    int dim = 0;
    std::vector<int> basis;
    std::vector<char> member;
};

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<int> decode(long v, int n, long p) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(v % p);
        v /= p;
    }
    return out;
}

int encode(const std::vector<int>& v, long p) {
    long out = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) out = out * p + *it;
    return static_cast<int>(out);
}

// All subspaces of F_p^n, one per reduced row echelon form.
std::vector<Subspace> subspaces(int n, long p) {
    std::vector<Subspace> out;
    const long size = ipow(p, n);
    for (int k = 0; k <= n; ++k) {
        // pivot columns c_0 < ... < c_{k-1}
        std::vector<int> pivots(static_cast<std::size_t>(k));
        std::function<void(int, int)> choose = [&](int idx, int start) {
            if (idx == k) {
                // free entries: row r, columns > pivots[r] that are not pivots
                std::vector<std::pair<int, int>> free;
                for (int r = 0; r < k; ++r)
                    for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c)
                        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
                const long fills = ipow(p, static_cast<int>(free.size()));
                for (long f = 0; f < fills; ++f) {
                    std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n), 0));
                    for (int r = 0; r < k; ++r) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
                    long rest = f;
                    for (auto [r, c] : free) {
                        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<int>(rest % p);
                        rest /= p;
                    }
                    Subspace s;
                    s.dim = k;
                    s.member.assign(static_cast<std::size_t>(size), 0);
                    for (const auto& row : rows) s.basis.push_back(encode(row, p));
                    for (long comb = 0; comb < ipow(p, k); ++comb) {
                        std::vector<int> v(static_cast<std::size_t>(n), 0);
                        long c = comb;
                        for (int r = 0; r < k; ++r) {
                            const long a = c % p;
                            c /= p;
                            for (int j = 0; j < n; ++j)
                                v[static_cast<std::size_t>(j)] = static_cast<int>((v[static_cast<std::size_t>(j)] + a * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) % p);
                        }
                        s.member[static_cast<std::size_t>(encode(v, p))] = 1;
                    }
                    out.push_back(std::move(s));
                }
                return;
            }
            for (int c = start; c < n; ++c) {
                pivots[static_cast<std::size_t>(idx)] = c;
                choose(idx + 1, c + 1);
            }
        };
        choose(0, 0);
    }
    return out;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

// Shared enumeration: every arrow matrix tuple (plus framing vectors) is
// decoded from one integer; `accept` sees the image tables and framing vectors.
class Enumerator {
public:
    Enumerator(const Quiver& q, const DimVector& d, const DimVector& n, long p) : q_(q), d_(d), n_(n), p_(p) {
        q.check(d);
        q.check(n);
        if (!is_prime(p)) throw InvalidArgumentError("brute-force counts need a prime field");
        long entries = 0;
        for (auto [i, j] : q.arrows()) entries += static_cast<long>(d[i]) * d[j];
        for (std::size_t i = 0; i < d.size(); ++i) entries += static_cast<long>(n[i]) * d[i];
        if (entries > 10) throw SizeGuardError("brute-force enumeration limited to 10 matrix entries");
        entries_ = static_cast<int>(entries);
        for (std::size_t i = 0; i < d.size(); ++i) {
            spaces_.push_back(subspaces(d[i], p));
            sizes_.push_back(ipow(p, d[i]));
        }
    }

    long total() const { return ipow(p_, entries_); }

    // images[a][v] = image of vector v under arrow a; framing[i] = list of vectors.
    struct Rep {
        std::vector<std::vector<int>> images;
        std::vector<std::vector<int>> framing;
    };

    Rep decode_rep(long index) const {
        Rep rep;
        for (auto [i, j] : q_.arrows()) {
            // matrix d_j x d_i, row-major
            std::vector<std::vector<int>> m(static_cast<std::size_t>(d_[j]), std::vector<int>(static_cast<std::size_t>(d_[i])));
            for (auto& row : m)
                for (auto& x : row) {
                    x = static_cast<int>(index % p_);
                    index /= p_;
                }
            std::vector<int> image(static_cast<std::size_t>(sizes_[i]));
            for (long v = 0; v < sizes_[i]; ++v) {
                auto vec = decode(v, d_[i], p_);
                std::vector<int> w(static_cast<std::size_t>(d_[j]), 0);
                for (int r = 0; r < d_[j]; ++r) {
                    long acc = 0;
                    for (int c = 0; c < d_[i]; ++c) acc += static_cast<long>(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) * vec[static_cast<std::size_t>(c)];
                    w[static_cast<std::size_t>(r)] = static_cast<int>(acc % p_);
                }
                image[static_cast<std::size_t>(v)] = encode(w, p_);
            }
            rep.images.push_back(std::move(image));
        }
        rep.framing.resize(d_.size());
        for (std::size_t i = 0; i < d_.size(); ++i) {
            for (int k = 0; k < n_[i]; ++k) {
                rep.framing[i].push_back(static_cast<int>(index % sizes_[i]));
                index /= sizes_[i];
            }
        }
        return rep;
    }

    // Calls visit(dims, chosen) for every subrepresentation; stops when visit returns true.
    template <class Visit>
    bool any_invariant(const Rep& rep, Visit&& visit) const {
        std::vector<std::size_t> choice(d_.size(), 0);
        while (true) {
            bool invariant = true;
            std::size_t a = 0;
            for (auto [i, j] : q_.arrows()) {
                const Subspace& src = spaces_[i][choice[i]];
                const Subspace& dst = spaces_[j][choice[j]];
                for (int b : src.basis) {
                    if (!dst.member[static_cast<std::size_t>(rep.images[a][static_cast<std::size_t>(b)])]) {
                        invariant = false;
                        break;
                    }
                }
                if (!invariant) break;
                ++a;
            }
            if (invariant) {
                DimVector dims(d_.size());
                for (std::size_t i = 0; i < d_.size(); ++i) dims[i] = spaces_[i][choice[i]].dim;
                if (visit(dims, choice)) return true;
            }
            std::size_t k = 0;
            while (k < choice.size()) {
                if (++choice[k] < spaces_[k].size()) break;
                choice[k] = 0;
                ++k;
            }
            if (k == choice.size()) return false;
        }
    }

    const std::vector<std::vector<Subspace>>& spaces() const { return spaces_; }

private:
    const Quiver& q_;
    DimVector d_, n_;
    long p_;
    int entries_ = 0;
    std::vector<std::vector<Subspace>> spaces_;
    std::vector<long> sizes_;
};

template <class Accept>
Integer parallel_count(const Enumerator& en, unsigned threads, Accept accept) {
    const long total = en.total();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<long>(total, 64))));
    std::vector<long> partial(threads, 0);
    auto work = [&](unsigned t) {
        for (long index = t; index < total; index += threads)
            if (accept(en.decode_rep(index))) ++partial[t];
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    Integer sum = 0;
    for (long c : partial) sum += c;
    return sum;
}

}  // namespace

Integer brute_force_sst_count(const Quiver& q, const Stability& theta, const DimVector& d, long p, unsigned threads) {
    if (d.is_zero()) return 1;
    const Enumerator en(q, d, q.zero(), p);
    const Rational mu = slope(theta, d);
    return parallel_count(en, threads, [&](const Enumerator::Rep& rep) {
        return !en.any_invariant(rep, [&](const DimVector& dims, const std::vector<std::size_t>&) {
            return !dims.is_zero() && slope(theta, dims) > mu;
        });
    });
}

Integer brute_force_framed_stable_count(const Quiver& q, const DimVector& n, const DimVector& d, long p,
                                        unsigned threads) {
    const Enumerator en(q, d, n, p);
    return parallel_count(en, threads, [&](const Enumerator::Rep& rep) {
        return !en.any_invariant(rep, [&](const DimVector& dims, const std::vector<std::size_t>& choice) {
            if (dims == d) return false;
            for (std::size_t i = 0; i < d.size(); ++i)
                for (int v : rep.framing[i])
                    if (!en.spaces()[i][choice[i]].member[static_cast<std::size_t>(v)]) return false;
            return true;
        });
    });
}

}  // namespace coha
