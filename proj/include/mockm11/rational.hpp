#ifndef MOCKM11_RATIONAL_HPP
#define MOCKM11_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mockm11 {

// Arbitrary precision rational; gmpxx keeps values canonical after every
// arithmetic operation (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "a" or "a/b" with optional leading sign.
Rational parse_rational(std::string_view text);

// "a" when the denominator is 1, else "a/b".
std::string to_string(const Rational& x);

// Always "a/b", used by the canonical series serialization.
std::string to_fraction_string(const Rational& x);

bool is_integer(const Rational& x);

// Throws std::overflow_error if x is not an integer fitting in int64.
std::int64_t to_int64(const Rational& x);
std::int64_t to_int64(const Integer& x);

Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace mockm11

#endif
