// Command-line front end: coha <verb> [options]. See README.md for the verbs.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "coha/acceptance.hpp"
#include "coha/coha.hpp"
#include "coha/counting.hpp"
#include "coha/dt.hpp"
#include "coha/error.hpp"
#include "coha/framed.hpp"
#include "coha/textio.hpp"

using namespace coha;

namespace {

enum class Mode { plain, json, csv };

struct Options {
    Mode mode = Mode::plain;
    bool json = false;
    bool csv = false;
    std::uint64_t seed = 20240611;
    unsigned threads = 0;

    std::string quiver, theta, dim, framing;
    std::string left, left_dim, right, right_dim;
    bool twisted = false;
    int D = -1, K = 12, N = -1, maxdeg = 4;
    long prime = 0;
    bool efimov = false;
};

// Exit code 1: a check ran and failed.
struct CheckFailed {};

// CSV cells: d is written as "(1,0)" and quoted.
std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

struct Row {
    DimVector d;
    std::string k;
    std::string value;
};

void print_rows(const Options& opt, const Quiver& q, const std::vector<Row>& rows, const char* k_name,
                const char* value_name) {
    if (opt.mode == Mode::csv) {
        std::cout << "d,k,value\n";
        for (const auto& r : rows) std::cout << csv_cell(format_dimvector(r.d)) << "," << csv_cell(r.k) << "," << csv_cell(r.value) << "\n";
    } else if (opt.mode == Mode::json) {
        Json out = Json::array();
        for (const auto& r : rows) out.push_back({{"d", dimvector_to_json(r.d, q)}, {k_name, r.k}, {value_name, r.value}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : rows) std::cout << format_dimvector(r.d) << "  " << k_name << "=" << r.k << "  " << r.value << "\n";
    }
}

void no_csv(const Options& opt, const char* verb) {
    if (opt.mode == Mode::csv) throw CLI::ValidationError(std::string("--csv is not available for ") + verb);
}

Quiver need_quiver(const Options& opt) {
    if (opt.quiver.empty()) throw CLI::RequiredError("--quiver");
    return parse_quiver(load_json(opt.quiver));
}

DimVector need_dim(const Quiver& q, const std::string& arg, const char* flag) {
    if (arg.empty()) throw CLI::RequiredError(flag);
    return parse_dimvector(load_json(arg), q);
}

Stability stability_or_zero(const Options& opt, const Quiver& q) {
    return opt.theta.empty() ? Stability::zero(q) : parse_stability(load_json(opt.theta), q);
}

unsigned thread_count(const Options& opt) {
    if (opt.threads) return opt.threads;
    return 1;
}

void cmd_info(const Options& opt) {
    no_csv(opt, "info");
    const Quiver q = need_quiver(opt);
    const std::size_t n = q.vertex_count();
    std::vector<std::vector<int>> euler(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) euler[i][j] = euler_form(q, q.unit(i), q.unit(j));
    if (opt.mode == Mode::json) {
        Json out = quiver_to_json(q);
        out["symmetric"] = is_symmetric(q);
        out["euler_form"] = euler;
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "vertices: " << n << " (";
    for (std::size_t i = 0; i < n; ++i) std::cout << (i ? " " : "") << q.vertices()[i];
    std::cout << ")\narrows: " << q.arrows().size();
    for (auto [i, j] : q.arrows()) std::cout << "  " << q.vertices()[i] << "->" << q.vertices()[j];
    std::cout << "\nsymmetric: " << (is_symmetric(q) ? "true" : "false") << "\neuler form:\n";
    for (const auto& row : euler) {
        for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "  ") << row[j];
        std::cout << "\n";
    }
}

void cmd_multiply(const Options& opt) {
    no_csv(opt, "multiply");
    const Quiver q = need_quiver(opt);
    const DimVector d = need_dim(q, opt.left_dim, "--left-dim");
    const DimVector e = need_dim(q, opt.right_dim, "--right-dim");
    if (opt.left.empty()) throw CLI::RequiredError("--left");
    if (opt.right.empty()) throw CLI::RequiredError("--right");
    const SymPoly f = parse_sympoly(opt.left, q, d);
    const SymPoly g = parse_sympoly(opt.right, q, e);
    const SymPoly prod = opt.twisted ? twisted_mul(q, f, g, build_sign_twist(q)) : coha_mul(q, f, g);
    std::optional<Bidegree> bideg;
    if (!prod.is_zero() && prod.is_homogeneous()) bideg = bidegree(q, prod);
    if (opt.mode == Mode::json) {
        Json out{{"d", dimvector_to_json(prod.dim(), q)}, {"body", format_sympoly(prod, q)}};
        if (bideg) out["k"] = bideg->k;
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << format_sympoly(prod, q) << "\n";
    if (bideg) std::cout << "bidegree: (" << format_dimvector(bideg->d) << ", " << bideg->k << ")\n";
}

void cmd_hn_types(const Options& opt) {
    no_csv(opt, "hn-types");
    const Quiver q = need_quiver(opt);
    const Stability theta = stability_or_zero(opt, q);
    const DimVector d = need_dim(q, opt.dim, "--dim");
    const auto types = hn_types(q, theta, d);
    if (opt.mode == Mode::json) {
        Json out = Json::array();
        for (const auto& t : types) {
            Json parts = Json::array();
            for (const auto& p : t.parts) parts.push_back(dimvector_to_json(p, q));
            out.push_back(parts);
        }
        std::cout << out.dump(2) << "\n";
        return;
    }
    for (const auto& t : types) {
        for (std::size_t i = 0; i < t.parts.size(); ++i)
            std::cout << (i ? "  " : "") << format_dimvector(t.parts[i]) << " [" << to_string(slope(theta, t.parts[i])) << "]";
        std::cout << "\n";
    }
}

std::vector<DimVector> targets(const Options& opt, const Quiver& q) {
    if (!opt.dim.empty()) return {parse_dimvector(load_json(opt.dim), q)};
    if (opt.D < 0) throw CLI::RequiredError("--dim or -D");
    std::vector<DimVector> out;
    for (auto& d : dimvectors_up_to(q.vertex_count(), opt.D))
        if (!d.is_zero()) out.push_back(d);
    return out;
}

void cmd_count_sst(const Options& opt) {
    const Quiver q = need_quiver(opt);
    SstCounter counter(q, stability_or_zero(opt, q));
    std::vector<Row> rows;
    Json out = Json::array();
    for (const auto& d : targets(opt, q)) {
        const QRational a = counter.coeff(d);
        const QRational count = counter.point_count(d);
        std::string at_prime;
        if (opt.prime) at_prime = to_string(count.evaluate_at_q(Rational(opt.prime)));
        if (opt.mode == Mode::json) {
            Json row{{"d", dimvector_to_json(d, q)}, {"value", a.to_string()}, {"count", count.to_string()}};
            if (opt.prime) row["count_at_prime"] = at_prime;
            out.push_back(row);
        } else if (opt.mode == Mode::csv) {
            rows.push_back({d, opt.prime ? std::to_string(opt.prime) : "", opt.prime ? at_prime : count.to_string()});
        } else {
            std::cout << format_dimvector(d) << "  A=" << a.to_string() << "  #Rsst=" << count.to_string();
            if (opt.prime) std::cout << "  #Rsst(q=" << opt.prime << ")=" << at_prime;
            std::cout << "\n";
        }
    }
    if (opt.mode == Mode::json) std::cout << out.dump(2) << "\n";
    if (opt.mode == Mode::csv) print_rows(opt, q, rows, "k", "value");
}

void cmd_count_bf(const Options& opt) {
    const Quiver q = need_quiver(opt);
    if (!opt.prime) throw CLI::RequiredError("--prime");
    const DimVector d = need_dim(q, opt.dim, "--dim");
    Integer count;
    if (!opt.framing.empty()) {
        const DimVector n = parse_dimvector(load_json(opt.framing), q);
        count = brute_force_framed_stable_count(q, n, d, opt.prime, thread_count(opt));
    } else {
        count = brute_force_sst_count(q, stability_or_zero(opt, q), d, opt.prime, thread_count(opt));
    }
    print_rows(opt, q, {{d, std::to_string(opt.prime), count.get_str()}}, "p", "value");
}

std::vector<Row> series_rows(const LaurentSeries& P) {
    std::vector<Row> rows;
    for (const auto& [d, c] : P.coeffs())
        for (const auto& [k, v] : c.coeffs()) rows.push_back({d, std::to_string(k), to_string(v)});
    return rows;
}

void cmd_series(const Options& opt) {
    const Quiver q = need_quiver(opt);
    const int D = opt.D < 0 ? 3 : opt.D;
    const int N = opt.N < 0 ? 12 : opt.N;
    const LaurentSeries P = coha_series(q, D, N);
    if (opt.mode == Mode::plain) {
        std::cout << "# coefficients of t^d, exact through s^" << N << "\n";
        for (const auto& [d, c] : P.coeffs()) std::cout << format_dimvector(d) << "  " << c.to_string() << "\n";
        return;
    }
    print_rows(opt, q, series_rows(P), "k", "value");
}

void cmd_dt(const Options& opt) {
    const Quiver q = need_quiver(opt);
    const int D = opt.D < 0 ? 3 : opt.D;
    DTTable table;
    if (opt.N >= 0) {
        table = dt_extract(coha_series(q, D, opt.N), D, opt.K);
    } else {
        // raise the s-order until every F_e is known through s^K
        for (int N = opt.K + 8;; N *= 2) {
            try {
                table = dt_extract(coha_series(q, D, N), D, opt.K);
                break;
            } catch (const BoundsError&) {
                if (N > (1 << 14)) throw;
            }
        }
    }
    std::vector<Row> rows;
    for (const auto& [key, c] : table.entries) rows.push_back({key.first, std::to_string(key.second), to_string(c)});
    std::vector<std::string> failures;
    if (opt.efimov) failures = efimov_check(table);

    if (opt.mode == Mode::json) {
        Json entries = Json::array();
        for (const auto& r : rows) entries.push_back({{"d", dimvector_to_json(r.d, q)}, {"k", std::stoi(r.k)}, {"c", r.value}});
        Json out{{"D", table.D}, {"K", table.K}, {"entries", entries}};
        if (opt.efimov) out["efimov"] = {{"pass", failures.empty()}, {"failures", failures}};
        std::cout << out.dump(2) << "\n";
    } else if (opt.mode == Mode::csv) {
        print_rows(opt, q, rows, "k", "value");
    } else {
        std::cout << "# c(d,k) for total(d) <= " << table.D << ", k <= " << table.K << "; entries not listed are 0\n";
        print_rows(opt, q, rows, "k", "c");
        if (opt.efimov) {
            std::cout << "efimov: " << (failures.empty() ? "pass" : "FAIL") << "\n";
            for (const auto& f : failures) std::cout << "  " << f << "\n";
        }
    }
    if (!failures.empty()) throw CheckFailed{};
}

void cmd_kernel_dims(const Options& opt) {
    const Quiver q = need_quiver(opt);
    const Stability theta = stability_or_zero(opt, q);
    const DimVector d = need_dim(q, opt.dim, "--dim");
    const auto kernel = hn_kernel_dims(q, theta, d, opt.maxdeg);
    if (opt.mode == Mode::plain) {
        std::cout << "# degree  kernel  dim H_d  quotient\n";
        for (const auto& [k, v] : kernel) {
            const auto whole = graded_dimension(d, k);
            std::cout << k << "  " << v << "  " << whole << "  " << whole - v << "\n";
        }
        return;
    }
    if (opt.mode == Mode::json) {
        Json out = Json::array();
        for (const auto& [k, v] : kernel)
            out.push_back({{"degree", k}, {"kernel", v}, {"total", graded_dimension(d, k)}});
        std::cout << Json{{"d", dimvector_to_json(d, q)}, {"dims", out}}.dump(2) << "\n";
        return;
    }
    std::vector<Row> rows;
    for (const auto& [k, v] : kernel) rows.push_back({d, std::to_string(k), std::to_string(v)});
    print_rows(opt, q, rows, "k", "value");
}

void cmd_hilb_dims(const Options& opt) {
    const Quiver q = need_quiver(opt);
    const DimVector d = need_dim(q, opt.dim, "--dim");
    if (opt.framing.empty()) throw CLI::RequiredError("--framing");
    const DimVector n = parse_dimvector(load_json(opt.framing), q);
    const GradedDims dims = hilb_module_dims(q, n, d, opt.maxdeg);
    if (opt.mode == Mode::json) {
        Json rows = Json::array();
        for (const auto& [k, v] : dims.dims) rows.push_back({{"degree", k}, {"dim", v}});
        std::cout << Json{{"d", dimvector_to_json(d, q)}, {"dims", rows}, {"total", dims.total()}}.dump(2) << "\n";
        return;
    }
    if (opt.mode == Mode::csv) {
        std::vector<Row> rows;
        for (const auto& [k, v] : dims.dims) rows.push_back({d, std::to_string(k), std::to_string(v)});
        print_rows(opt, q, rows, "k", "value");
        return;
    }
    std::cout << "# degree  dim\n";
    for (const auto& [k, v] : dims.dims) std::cout << k << "  " << v << "\n";
    std::cout << "total: " << dims.total() << "\n";
}

void cmd_check(const Options& opt) {
    no_csv(opt, "check");
    const unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    auto results = run_acceptance(opt.seed, threads, opt.mode == Mode::plain ? &std::cout : nullptr);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.pass;
    if (opt.mode == Mode::json) {
        Json out = Json::array();
        for (const auto& r : results)
            out.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"detail", r.detail}});
        std::cout << out.dump(2) << "\n";
    }
    if (!ok) throw CheckFailed{};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the cohomological Hall algebra of a quiver"};
    app.require_subcommand(1);
    Options opt;

    auto* json = app.add_flag("--json", opt.json, "JSON output");
    app.add_flag("--csv", opt.csv, "CSV output (columns d,k,value)")->excludes(json);
    app.add_option("--seed", opt.seed, "seed for randomized checks");
    app.add_option("--threads", opt.threads, "worker threads for enumeration")->envname("COHA_THREADS");

    auto quiver_opt = [&](CLI::App* sub) { sub->add_option("--quiver,-q", opt.quiver, "quiver JSON (file or inline)"); };
    auto theta_opt = [&](CLI::App* sub) { sub->add_option("--theta", opt.theta, "stability JSON, defaults to 0"); };
    auto dim_opt = [&](CLI::App* sub) { sub->add_option("--dim,-d", opt.dim, "dimension vector JSON"); };

    std::vector<std::pair<CLI::App*, void (*)(const Options&)>> verbs;
    auto verb = [&](const char* name, const char* help, void (*fn)(const Options&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        verbs.emplace_back(sub, fn);
        return sub;
    };

    auto* info = verb("info", "vertices, arrows, symmetry and Euler form", cmd_info);
    quiver_opt(info);
    info->add_option("file", opt.quiver, "quiver JSON (file or inline)");

    auto* mul = verb("multiply", "CoHa product of two elements", cmd_multiply);
    quiver_opt(mul);
    mul->add_option("--left", opt.left, "first factor, e.g. \"x[a,1]^2\"");
    mul->add_option("--left-dim", opt.left_dim, "dimension vector of the first factor");
    mul->add_option("--right", opt.right, "second factor");
    mul->add_option("--right-dim", opt.right_dim, "dimension vector of the second factor");
    mul->add_flag("--twisted", opt.twisted, "use the sign-twisted product");

    auto* hn = verb("hn-types", "Harder-Narasimhan types of a dimension vector", cmd_hn_types);
    quiver_opt(hn);
    theta_opt(hn);
    dim_opt(hn);

    auto* cs = verb("count-sst", "semi-stable counts from the HN recursion", cmd_count_sst);
    quiver_opt(cs);
    theta_opt(cs);
    dim_opt(cs);
    cs->add_option("-D", opt.D, "all dimension vectors up to this total");
    cs->add_option("--prime,-p", opt.prime, "also evaluate the count at q = p");

    auto* bf = verb("count-bf", "semi-stable (or framed stable) counts by enumeration over F_p", cmd_count_bf);
    quiver_opt(bf);
    theta_opt(bf);
    dim_opt(bf);
    bf->add_option("--prime,-p", opt.prime, "field size");
    bf->add_option("--framing", opt.framing, "count framed stable pairs for this framing instead");

    auto* ser = verb("series", "the generating series P_Q(q,t)", cmd_series);
    quiver_opt(ser);
    ser->add_option("-D", opt.D, "bound on total(d) (default 3)");
    ser->add_option("-N", opt.N, "s-order (default 12)");

    auto* dt = verb("dt", "DT invariants c(d,k) from the product expansion", cmd_dt);
    quiver_opt(dt);
    dt->add_option("-D", opt.D, "bound on total(d) (default 3)");
    dt->add_option("-K", opt.K, "bound on k (default 12)");
    dt->add_option("-N", opt.N, "s-order of the series (default: raised until sufficient)");
    dt->add_flag("--check-efimov", opt.efimov, "fail unless every c is a nonnegative integer");

    auto* kd = verb("kernel-dims", "dimensions of the span of HN products in H_d", cmd_kernel_dims);
    quiver_opt(kd);
    theta_opt(kd);
    dim_opt(kd);
    kd->add_option("--maxdeg", opt.maxdeg, "highest polynomial degree (default 4)");

    auto* hd = verb("hilb-dims", "graded dimensions of the non-commutative Hilbert scheme cohomology", cmd_hilb_dims);
    quiver_opt(hd);
    dim_opt(hd);
    hd->add_option("--framing", opt.framing, "framing vector JSON");
    hd->add_option("--maxdeg", opt.maxdeg, "highest polynomial degree (default 4)");

    verb("check", "run the acceptance checks", cmd_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    opt.mode = opt.json ? Mode::json : opt.csv ? Mode::csv : Mode::plain;

    try {
        for (auto& [sub, fn] : verbs)
            if (sub->parsed()) fn(opt);
    } catch (const CheckFailed&) {
        return 1;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const coha::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
