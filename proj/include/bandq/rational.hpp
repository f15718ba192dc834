#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace bandq {

/// Exact rational scalar. gmpxx keeps arithmetic results canonical
/// (lowest terms, positive denominator); values built from text are
/// canonicalized by parse_rational.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses an integer, "p/q" fraction, or an exact decimal such as "-1.25"
/// or "3e-2". Throws Error(ParseError / ZeroDenominator).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const RationalVector& v);

inline int sign(const Rational& r) { return sgn(r); }

double to_double(const Rational& r);

/// Best rational approximation with denominator <= max_den (continued fractions).
Rational rationalize(double value, long max_den);

}  // namespace bandq
