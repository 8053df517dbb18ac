#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coha {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (whitespace around the parts is ignored).
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace coha
