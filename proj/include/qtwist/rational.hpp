#pragma once

#include <gmpxx.h>

#include <string>

namespace qtwist {

using Rational = mpq_class;
using BigInt = mpz_class;

// "num/den" in lowest terms with the sign on the numerator; "3" -> "3/1".
std::string fraction_string(const Rational& r);

// Inverse of fraction_string; also accepts a bare integer string.
Rational parse_fraction(const std::string& s);

// Representative of r mod 1 in [0, 1).
Rational rational_mod_one(const Rational& r);

// r rounded down to an int64, throwing if r is not an integer in range.
std::int64_t rational_to_int64(const Rational& r);

}  // namespace qtwist
