#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace axial {

// Exact rational scalar. GMP keeps every value in lowest terms with a
// positive denominator once canonicalized.
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long numerator, long denominator = 1);

// Parses "p", "-p", "p/q". Throws ValidationError on malformed input or q = 0.
Rat parse_rat(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rat& value);

inline bool is_zero(const Rat& value) { return sgn(value) == 0; }

}  // namespace axial
