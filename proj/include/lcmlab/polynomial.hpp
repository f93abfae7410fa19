#pragma once

#include "lcmlab/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcmlab {

// Dense integer polynomial. coeffs()[i] is the coefficient of x^i. The zero
// polynomial has no stored coefficients, so the leading stored coefficient is
// always nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const BigInt& c);
  /// c * x^k
  static Poly monomial(const BigInt& c, std::size_t k);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  /// Coefficient of x^i, zero past the end.
  BigInt coeff(std::size_t i) const;
  /// Leading coefficient; 0 for the zero polynomial.
  BigInt leading() const;
  bool has_nonneg_coeffs() const;

  BigInt eval(const BigInt& x) const;

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p);
  friend bool operator==(const Poly& p, const Poly& q) = default;

  /// Human-readable form, highest power first, e.g. "x^2-3x+2".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

inline BigInt eval(const Poly& p, const BigInt& x) { return p.eval(x); }
inline Poly add(const Poly& p, const Poly& q) { return p + q; }
inline Poly sub(const Poly& p, const Poly& q) { return p - q; }
inline Poly mul(const Poly& p, const Poly& q) { return p * q; }
Poly scale(const Poly& p, const BigInt& c);

/// Coefficients written constant term first, as "0,1" for x. Throws
/// std::invalid_argument naming the first bad token.
Poly parse_coeff_list(std::string_view text);
std::string format_coeff_list(const Poly& p);

/// Product of (x - j) over j in [m, n] with j != skip. Empty product is 1.
/// Throws std::invalid_argument unless m <= skip <= n.
Poly linear_product(std::int64_t m, std::int64_t n, std::int64_t skip);

struct IdentityCheck {
  std::int64_t m = 0;
  std::int64_t n = 0;
  /// Symbolic expansion equals the constant (n - m)!.
  bool holds = false;
  Poly lhs;
  /// Pointwise evaluation at x = n+1 .. n+deg+2 (deg = n - m, the degree of
  /// each product term) equals (n - m)! at every point. Computed without
  /// building any polynomial.
  bool pointwise_agrees = false;
};

/// Checks the finite-difference identity
///   sum_{k=m}^{n} (-1)^{n-k} C(n-m, k-m) prod_{j in [m,n], j != k} (x - j) = (n-m)!
/// by symbolic expansion, and independently by pointwise evaluation.
/// Requires 1 <= m <= n.
IdentityCheck verify_identity(std::int64_t m, std::int64_t n);

/// Left-hand side of the identity evaluated at a single integer point.
BigInt identity_lhs_at(std::int64_t m, std::int64_t n, const BigInt& x);

}  // namespace lcmlab
