#include "lcmlab/bigint.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lcmlab {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // After step i, result == C(n - k + i, i), so the division is exact.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return result;
}

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= static_cast<unsigned long>(i);
  return result;
}

BigInt pow2(std::uint64_t e) {
  BigInt result;
  mpz_setbit(result.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return result;
}

BigInt ipow(const BigInt& base, std::uint64_t e) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return result;
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt parse_decimal(std::string_view token) {
  std::string_view digits = token;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  bool ok = !digits.empty();
  for (char c : digits) ok = ok && c >= '0' && c <= '9';
  if (!ok) throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
  std::string text(token.front() == '+' ? token.substr(1) : token);
  return BigInt(text, 10);
}

double natural_log(const BigInt& v) {
  if (sgn(v) <= 0) throw std::domain_error("natural_log of a non-positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

std::uint64_t bit_length(const BigInt& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace lcmlab
