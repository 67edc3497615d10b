#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chords {

// Exact rational scalar used for every coordinate and length in the library.
// mpq_class keeps values in canonical reduced form with a positive denominator,
// which is exactly the invariant the rest of the code relies on.
using Rational = mpq_class;

// Renders as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Parses "p", "-p", "p/q" (decimal digits only, q > 0 after sign rules).
// Throws std::invalid_argument on anything else, including "p/0".
Rational rational_from_string(std::string_view text);

// Largest integer <= r.
mpz_class floor_of(const Rational& r);

// Nearest multiple of 1/denominator (ties away from zero), reduced.
Rational rationalize(double x, long denominator);

double to_double(const Rational& r);

}  // namespace chords
