#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hlv {

// mpq_class keeps gcd(|num|, den) = 1 and den > 0 after every operation.
using BigRational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
BigRational parse_rational(std::string_view text);

/// Always "num/den", including integers ("3/1"); this is the wire format.
std::string to_fraction_string(const BigRational& value);

/// Short form: "3", "-1/2".
std::string to_short_string(const BigRational& value);

inline bool is_zero(const BigRational& value) { return sgn(value) == 0; }

} // namespace hlv
