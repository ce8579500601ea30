#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mclimb {

using BigInt = mpz_class;
using Rational = mpq_class;

// Parses "7", "-3/4", "0.125" or "1.5e-3" into an exact rational.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or just "p" when q == 1.
std::string to_string(const Rational& q);

// Nearest long double; safe for magnitudes far outside the double range.
long double to_long_double(const Rational& q);

long double log2(const BigInt& x);       // x > 0
long double log2(const Rational& q);     // q > 0

BigInt binomial(std::uint64_t m, std::uint64_t r);  // 0 when r > m

// Bit length of x - 1, i.e. the width needed to store a value in [0, x). x >= 1.
std::uint64_t ceil_log2(const BigInt& x);

// ceil(q) and floor(q) for exact rationals.
BigInt ceil(const Rational& q);
BigInt floor(const Rational& q);

}  // namespace mclimb
