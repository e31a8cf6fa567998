#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace scatter {

// Exact rational scalar used throughout the library. Floating point enters
// only at evaluation boundaries (quadrature, spectra, CSV float columns).
using Rational = mpq_class;
using BigInt = mpz_class;

BigInt factorial(unsigned long n);

// Parses "3", "-2", "1/7", "-3/4" and literal decimals such as "0.25"
// (rationalized exactly, 0.25 -> 1/4). Throws std::invalid_argument on
// malformed input or zero denominator.
Rational rational_from_string(const std::string& text);

// Canonical "num/den" rendering; integers shorten to "num".
std::string to_fraction_string(const Rational& q);

// Round-trip-safe double rendering (17 significant digits).
std::string to_float_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace scatter
