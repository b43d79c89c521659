#pragma once

#include <gmpxx.h>

#include <string>

namespace triweights {

// All exact arithmetic runs on GMP rationals. mpq_class keeps values
// canonical under arithmetic, but the (num, den) constructor does not
// canonicalize; construct fractions through ratio() or parse_rational().
using Rational = mpq_class;

Rational ratio(long num, long den);

// Accepts "p" or "p/q" with optional sign; throws std::invalid_argument
// on anything else (including q == 0).
Rational parse_rational(const std::string& s);

// Canonical form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace triweights
