#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ravenlab {

/// Exact rational in canonical reduced form (denominator > 0).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "num/den" or a bare integer. Throws ParameterError on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always renders "num/den", including integers ("0/1", "1/1").
std::string to_string(const Rational& value);

/// 2^-bits as an exact rational.
Rational pow2_neg(unsigned bits);

}  // namespace ravenlab
