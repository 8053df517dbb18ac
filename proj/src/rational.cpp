#include "coha/rational.hpp"

#include <cctype>

#include "coha/error.hpp"

namespace coha {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

Integer parse_integer(const std::string& s, std::string_view whole) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("malformed rational '" + std::string(whole) + "'");
    std::string digits = s[0] == '+' ? s.substr(1) : s;
    return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(trim(text), text));
    Integer num = parse_integer(trim(text.substr(0, slash)), text);
    Integer den = parse_integer(trim(text.substr(slash + 1)), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer factorial(long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return out;
}

}  // namespace coha
