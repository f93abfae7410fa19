#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lcmlab {

/// Unbounded signed integer. Every lcm, product and threshold in the library
/// is carried in this type; nothing on a decision path goes through a float.
using BigInt = mpz_class;

/// C(n, k) by the multiplicative formula; 0 when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

BigInt factorial(std::uint64_t n);

/// 2^e
BigInt pow2(std::uint64_t e);

BigInt ipow(const BigInt& base, std::uint64_t e);

/// Decimal rendering, arbitrary length.
std::string to_decimal(const BigInt& v);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument
/// naming the token when it is not one.
BigInt parse_decimal(std::string_view token);

/// Natural logarithm of a positive integer, computed from the mantissa and
/// binary exponent so it works far beyond the double range. Display only.
double natural_log(const BigInt& v);

/// Number of bits in |v|; 0 for v == 0.
std::uint64_t bit_length(const BigInt& v);

}  // namespace lcmlab
