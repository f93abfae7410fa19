#pragma once

#include "lcmlab/bigint.hpp"
#include "lcmlab/lcm_engine.hpp"
#include "lcmlab/polynomial.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace lcmlab {

enum class BoundKind { MainTheorem, LemmaKey, Key1, Key2, Lemma22, Nair, Hanson, HalfRangeLn };

std::string_view to_string(BoundKind kind);

enum class Relation { GreaterEqual, Greater, Less, Equal };

std::string_view to_string(Relation rel);

/// The two exact integers a bound reduces to, and the relation claimed
/// between them.
struct Witness {
  BigInt left;
  BigInt right;
  Relation relation = Relation::GreaterEqual;

  bool evaluate() const;
};

struct BoundReport {
  BoundKind kind = BoundKind::MainTheorem;
  /// Always witness.evaluate().
  bool holds = false;
  /// The lcm (or count) side of the bound before any rescaling.
  BigInt lhs;
  std::string rhs_description;
  Witness witness;
  /// False when the input lies outside the range the bound is claimed for,
  /// so a failure there is "bound silent", not "bound violated".
  bool in_claimed_range = true;
};

/// Which index range a theorem check takes the lcm over.
enum class RangeMode { Half, Full };

std::string_view to_string(RangeMode mode);

/// lcm over ceil(n/2)..n (or 1..n in Full mode) against 2^n. f must have
/// degree >= 1 and nonnegative coefficients; std::invalid_argument otherwise.
BoundReport main_theorem_check(const Poly& f, std::int64_t n, RangeMode mode = RangeMode::Half,
                               const ReduceOptions& opts = {});

/// Root-free form of
///   lcm(f(m..n)) >= prod_k |f(k)/a_s|^(1/s) / (n-m)!
/// checked as (L (n-m)!)^s |a_s|^(n-m+1) >= prod_k |f(k)|.
/// f may have any integer coefficients but needs degree >= 1.
BoundReport lemma_key_check(const Poly& f, std::int64_t m, std::int64_t n, const ReduceOptions& opts = {});

/// ceil(n/2) C(n, ceil(n/2)) > 2^n; claimed for n >= 7.
BoundReport lemma22_holds(std::int64_t n);

/// lcm(f(m-1), f(m)) (2m - 1) >= (m(m-1))^2 for quadratic f with
/// nonnegative coefficients and m >= 2.
BoundReport key1_check(const Poly& f, std::int64_t m);

enum class Key2Case { Full, Half };

std::string_view to_string(Key2Case c);

struct Key2Result {
  BigInt value;
  Key2Case which = Key2Case::Full;
};

/// lcm(a, a+b, a+2b) for coprime positive a, b, which is either the full
/// product or half of it. The value is computed directly and cross-checked
/// against the gcd identity; a mismatch throws std::logic_error.
Key2Result key2_lcm(const BigInt& a, const BigInt& b);

/// key2_lcm as a report: witness compares value * (1 or 2) with a(a+b)(a+2b).
BoundReport key2_check(const BigInt& a, const BigInt& b);

/// lcm(1..n) >= 2^n, claimed for n >= 7.
BoundReport nair_check(std::int64_t n);
/// lcm(1..n) < 3^n.
BoundReport hanson_check(std::int64_t n);
/// lcm(ceil(n/2)..n) >= 2^(n-1).
BoundReport half_range_ln_check(std::int64_t n);

}  // namespace lcmlab
