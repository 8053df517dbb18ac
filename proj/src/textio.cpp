#include "coha/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "coha/error.hpp"

namespace coha {

Json load_json(const std::string& arg) {
    std::size_t first = arg.find_first_not_of(" \t\r\n");
    const bool inline_text = first != std::string::npos &&
                             (arg[first] == '{' || arg[first] == '[' || arg[first] == '"' || arg[first] == '-' ||
                              std::isdigit(static_cast<unsigned char>(arg[first])));
    std::string text;
    std::string origin = "inline JSON";
    if (inline_text) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot open " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
        origin = arg;
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // byte offset -> line
        std::size_t line = 1;
        for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()); ++i)
            if (text[i] == '\n') ++line;
        throw ParseError(origin + ", line " + std::to_string(line) + ": " + e.what());
    }
}

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::string as_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a string");
    return j.get<std::string>();
}

int as_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    return j.get<int>();
}

}  // namespace

Quiver parse_quiver(const Json& j) {
    std::vector<std::string> vertices;
    const Json& vs = field(j, "vertices");
    if (!vs.is_array()) throw ParseError("\"vertices\" must be an array");
    for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(as_string(vs[i], "vertices[" + std::to_string(i) + "]"));
    std::vector<std::pair<std::string, std::string>> arrows;
    if (j.contains("arrows")) {
        const Json& as = j.at("arrows");
        if (!as.is_array()) throw ParseError("\"arrows\" must be an array");
        for (std::size_t i = 0; i < as.size(); ++i) {
            const std::string where = "arrows[" + std::to_string(i) + "]";
            if (!as[i].is_object()) throw ParseError(where + ": expected an object");
            arrows.emplace_back(as_string(field(as[i], "from"), where + ".from"), as_string(field(as[i], "to"), where + ".to"));
        }
    }
    return Quiver(std::move(vertices), std::move(arrows));
}

Json quiver_to_json(const Quiver& q) {
    Json j;
    j["vertices"] = q.vertices();
    j["arrows"] = Json::array();
    for (auto [i, k] : q.arrows()) j["arrows"].push_back({{"from", q.vertices()[i]}, {"to", q.vertices()[k]}});
    return j;
}

DimVector parse_dimvector(const Json& j, const Quiver& q) {
    DimVector d(q.vertex_count());
    if (j.is_number_integer() && q.vertex_count() == 1) {
        d[0] = j.get<int>();
        if (d[0] < 0) throw IncompatibleError("negative dimension");
        return d;
    }
    if (!j.is_object()) throw ParseError("dimension vector must be an object keyed by vertex");
    if (j.size() != q.vertex_count()) throw IncompatibleError("dimension vector must list every vertex exactly once");
    for (const auto& [key, value] : j.items()) {
        int v = as_int(value, "dimension of " + key);
        if (v < 0) throw IncompatibleError("negative dimension at " + key);
        d[q.index_of(key)] = v;
    }
    return d;
}

Json dimvector_to_json(const DimVector& d, const Quiver& q) {
    q.check(d);
    Json j = Json::object();
    for (std::size_t i = 0; i < d.size(); ++i) j[q.vertices()[i]] = d[i];
    return j;
}

Stability parse_stability(const Json& j, const Quiver& q) {
    if (!j.is_object()) throw ParseError("stability must be an object keyed by vertex");
    if (j.size() != q.vertex_count()) throw IncompatibleError("stability must list every vertex exactly once");
    Stability theta{std::vector<Rational>(q.vertex_count())};
    for (const auto& [key, value] : j.items()) {
        Rational r;
        if (value.is_string()) r = parse_rational(value.get<std::string>());
        else r = Rational(as_int(value, "stability of " + key));
        theta.theta[q.index_of(key)] = r;
    }
    return theta;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const Quiver& q, const DimVector& d)
        : text_(text), q_(q), d_(d), nvars_(alphabet_size(d)) {}

    Polynomial parse() {
        Polynomial out(nvars_);
        skip();
        if (eof()) throw error("empty polynomial");
        bool first = true;
        while (!eof()) {
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip();
            } else if (!first) {
                throw error("expected '+' or '-'");
            }
            out += term() * sign;
            first = false;
            skip();
        }
        return out;
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    ParseError error(const std::string& what) const {
        return ParseError("polynomial, column " + std::to_string(pos_ + 1) + ": " + what);
    }
    void expect(char c) {
        skip();
        if (eof() || peek() != c) throw error(std::string("expected '") + c + "'");
        ++pos_;
    }

    long integer() {
        skip();
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw error("expected a number");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial term() {
        Polynomial out = Polynomial::constant(nvars_, 1);
        while (true) {
            skip();
            if (eof()) throw error("unexpected end of input");
            if (peek() == 'x') {
                ++pos_;
                expect('[');
                skip();
                std::size_t start = pos_;
                while (!eof() && peek() != ',' && peek() != ']') ++pos_;
                std::string name(text_.substr(start, pos_ - start));
                while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
                std::size_t vertex;
                try {
                    vertex = q_.index_of(name);
                } catch (const Error&) {
                    throw error("unknown vertex '" + name + "'");
                }
                expect(',');
                long nu = integer();
                expect(']');
                if (nu < 1 || nu > d_[vertex])
                    throw error("variable index " + std::to_string(nu) + " out of range at vertex " + name);
                long e = 1;
                skip();
                if (!eof() && peek() == '^') {
                    ++pos_;
                    e = integer();
                }
                out = out * Polynomial::variable(nvars_, variable_index(d_, vertex, static_cast<std::size_t>(nu - 1))).pow(static_cast<int>(e));
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::size_t start = pos_;
                while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
                try {
                    out = out * parse_rational(text_.substr(start, pos_ - start));
                } catch (const Error& e) {
                    throw error(e.what());
                }
            } else {
                throw error(std::string("unexpected '") + peek() + "'");
            }
            skip();
            if (eof() || peek() != '*') return out;
            ++pos_;
        }
    }

    std::string_view text_;
    const Quiver& q_;
    const DimVector& d_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

SymPoly parse_sympoly(std::string_view text, const Quiver& q, const DimVector& d) {
    q.check(d);
    return SymPoly(d, PolyParser(text, q, d).parse());
}

std::string format_sympoly(const SymPoly& f, const Quiver& q) {
    const DimVector& d = f.dim();
    q.check(d);
    // variable index -> (vertex, nu)
    std::vector<std::pair<std::size_t, int>> names;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (int nu = 1; nu <= d[i]; ++nu) names.emplace_back(i, nu);
    std::ostringstream os;
    bool first = true;
    // highest degree first reads more naturally
    for (auto it = f.poly().terms().rbegin(); it != f.poly().terms().rend(); ++it) {
        const auto& [mono, c] = *it;
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        const Rational a = abs(c);
        bool constant = true;
        for (int e : mono)
            if (e) constant = false;
        bool need_star = false;
        if (constant || a != 1) {
            os << to_string(a);
            need_star = true;
        }
        for (std::size_t v = 0; v < mono.size(); ++v) {
            if (!mono[v]) continue;
            if (need_star) os << " * ";
            os << "x[" << q.vertices()[names[v].first] << "," << names[v].second << "]";
            if (mono[v] > 1) os << "^" << mono[v];
            need_star = true;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::string format_dimvector(const DimVector& d) {
    std::ostringstream os;
    os << d;
    return os.str();
}

}  // namespace coha
