#pragma once

// Exact arithmetic: arbitrary-precision integers and reduced rationals (GMP).

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace premon {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", "p/q"; the result is reduced. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Rational pow(const Rational& q, std::size_t e);
Integer pow(const Integer& z, std::size_t e);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace premon
