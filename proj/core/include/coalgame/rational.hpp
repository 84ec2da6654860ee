#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coalgame {

/// Exact rational number. Every quantity the engine reports is computed in
/// exact arithmetic; doubles appear only in the Monte Carlo estimators and
/// in display helpers.
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::invalid_argument if den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p/q", plain integers ("-3") and finite decimal strings ("0.25").
/// Anything else — exponents, floats like "1e-2", empty input, a zero
/// denominator — throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or just "p" when the denominator is 1. The sign
/// sits on the numerator.
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

/// Shortest decimal string that round-trips through binary64. For display
/// next to the exact form; never fed back into exact state.
std::string to_decimal_string(const Rational& value);

mpz_class factorial(unsigned long n);

}  // namespace coalgame
