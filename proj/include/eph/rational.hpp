#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eph {

/// Arbitrary-precision exact rational. All geometry outside the renderer
/// is carried out in this type.
using Rational = mpq_class;

/// num/den in lowest terms. Throws std::invalid_argument when den is 0.
Rational ratio(long num, long den);

/// Parses "p/q", an integer, or a finite decimal such as "-0.25"
/// (converted exactly). Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// -1, 0 or +1.
int sign(const Rational& r);

/// Exact rational value of a finite double.
Rational from_double(double x);

double to_double(const Rational& r);

}  // namespace eph
