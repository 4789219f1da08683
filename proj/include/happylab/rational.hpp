#pragma once

#include <gmpxx.h>

#include <string>

namespace happylab {

// Exact rational scalar used throughout. All set-function identities and the
// default LP path are checked with equality, never tolerance.
using Rat = mpq_class;

// Canonical rational from small integers (canonicalizes sign and gcd).
Rat rat_of(long num, long den = 1);

// Accepts "p", "p/q", and plain decimals like "0.25" or "-1.5".
Rat rat_from_string(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

// 12 significant digits, for reports only; exact values travel as p/q.
std::string rat_to_decimal(const Rat& r);

double rat_to_double(const Rat& r);

}  // namespace happylab
