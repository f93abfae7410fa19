#pragma once

#include "lcmlab/bigint.hpp"
#include "lcmlab/polynomial.hpp"
#include "lcmlab/tree_reduce.hpp"

#include <cstdint>
#include <utility>

namespace lcmlab {

/// Nonnegative gcd; gcd(0, 0) == 0.
BigInt gcd(const BigInt& a, const BigInt& b);

/// lcm(|a|, |b|), or 0 when either argument is 0.
BigInt lcm2(const BigInt& a, const BigInt& b);

/// lcm of f(i) over m <= i <= n.
struct RangeLcmRequest {
  Poly f;
  std::int64_t m = 1;
  std::int64_t n = 1;

  /// Throws std::invalid_argument unless 1 <= m <= n.
  RangeLcmRequest(Poly f, std::int64_t m, std::int64_t n);

  /// The range ceil(n/2) .. n.
  static RangeLcmRequest half(Poly f, std::int64_t n);
  /// The range 1 .. n.
  static RangeLcmRequest full(Poly f, std::int64_t n);
};

/// (ceil(n/2), n). Throws std::invalid_argument for n < 1.
std::pair<std::int64_t, std::int64_t> half_range(std::int64_t n);

/// lcm of |f(i)| over the request range, 0 iff some f(i) == 0. Values are
/// evaluated and combined with tree_reduce; the result does not depend on
/// opts.threads.
BigInt lcm_range(const RangeLcmRequest& req, const ReduceOptions& opts = {});

/// lcm(1, ..., n).
BigInt lcm_one_to(std::int64_t n, const ReduceOptions& opts = {});

struct PsiValue {
  std::int64_t n = 0;
  BigInt lcm_value;
  /// log(lcm_value). Display only.
  double log_value = 0.0;
  std::uint64_t bit_length = 0;
};

/// Chebyshev psi(n) = log lcm(1..n), carried as the exact lcm.
PsiValue chebyshev_psi(std::int64_t n, const ReduceOptions& opts = {});

}  // namespace lcmlab
