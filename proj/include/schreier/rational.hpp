#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace schreier {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses `n`, `-n` or `n/d` into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// `n` for integers, `n/d` otherwise.
std::string to_string(const Rational& q);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace schreier
