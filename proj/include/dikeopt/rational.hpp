#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dikeopt {

// All model arithmetic runs on exact rationals so that optimum comparisons,
// feasibility residuals and rank computations carry no rounding error.
using Rational = mpq_class;

// Monetary quantities (costs, expected damages) in net-present-value units.
// Non-negativity is a model invariant checked by validate_instance, not by
// the type itself: loaders must be able to hold a bad value long enough to
// report it.
using Money = Rational;

// Parses "123", "-4.25", "7/3". Throws Error(IoError) on malformed input or
// a zero denominator.
Rational parse_rational(std::string_view text);

// Exact text form: a plain decimal when the denominator divides a power of
// ten, otherwise "num/den". Never goes through floating point.
std::string to_decimal_string(const Rational& value);

// Always "num/den" (canonical form, den > 0).
std::string to_fraction_string(const Rational& value);

bool is_integral(const Rational& value);

}  // namespace dikeopt
