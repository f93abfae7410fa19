#include "lcmlab/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lcmlab {

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Poly Poly::constant(const BigInt& c) { return Poly(std::vector<BigInt>{c}); }

Poly Poly::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> coeffs(k + 1);
  coeffs[k] = c;
  return Poly(std::move(coeffs));
}

void Poly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt Poly::leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

bool Poly::has_nonneg_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) >= 0; });
}

BigInt Poly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly operator+(const Poly& p, const Poly& q) {
  std::vector<BigInt> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] += q.coeffs_[i];
  return Poly(std::move(out));
}

Poly operator-(const Poly& p) {
  std::vector<BigInt> out = p.coeffs_;
  for (auto& c : out) c = -c;
  return Poly(std::move(out));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<BigInt> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (sgn(p.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly scale(const Poly& p, const BigInt& c) {
  std::vector<BigInt> out = p.coeffs();
  for (auto& v : out) v *= c;
  return Poly(std::move(out));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const BigInt mag = abs(c);
    if (sgn(c) < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

Poly parse_coeff_list(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty coefficient list");
  std::vector<BigInt> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    coeffs.push_back(parse_decimal(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly(std::move(coeffs));
}

std::string format_coeff_list(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ',';
    out += p.coeffs()[i].get_str();
  }
  return out;
}

Poly linear_product(std::int64_t m, std::int64_t n, std::int64_t skip) {
  if (m > n) throw std::invalid_argument("linear_product: m > n");
  if (skip < m || skip > n) throw std::invalid_argument("linear_product: skip outside [m, n]");
  Poly result{1};
  for (std::int64_t j = m; j <= n; ++j) {
    if (j == skip) continue;
    result = result * Poly(std::vector<BigInt>{BigInt(-j), BigInt(1)});
  }
  return result;
}

namespace {

BigInt term_sign_binomial(std::int64_t m, std::int64_t n, std::int64_t k) {
  BigInt c = binomial(static_cast<std::uint64_t>(n - m), static_cast<std::uint64_t>(k - m));
  if ((n - k) % 2 != 0) c = -c;
  return c;
}

}  // namespace

BigInt identity_lhs_at(std::int64_t m, std::int64_t n, const BigInt& x) {
  BigInt total = 0;
  for (std::int64_t k = m; k <= n; ++k) {
    BigInt prod = 1;
    for (std::int64_t j = m; j <= n; ++j) {
      if (j != k) prod *= x - j;
    }
    total += term_sign_binomial(m, n, k) * prod;
  }
  return total;
}

IdentityCheck verify_identity(std::int64_t m, std::int64_t n) {
  if (m < 1 || m > n) throw std::invalid_argument("verify_identity: need 1 <= m <= n");
  IdentityCheck out;
  out.m = m;
  out.n = n;

  for (std::int64_t k = m; k <= n; ++k) {
    out.lhs = out.lhs + scale(linear_product(m, n, k), term_sign_binomial(m, n, k));
  }
  const BigInt expected = factorial(static_cast<std::uint64_t>(n - m));
  out.holds = out.lhs == Poly::constant(expected);

  // A polynomial of degree <= d agreeing with a constant at d + 1 points is
  // that constant; sampling deg + 2 points leaves one to spare.
  const std::int64_t max_term_degree = n - m;
  out.pointwise_agrees = true;
  for (std::int64_t x = n + 1; x <= n + max_term_degree + 2; ++x) {
    if (identity_lhs_at(m, n, BigInt(x)) != expected) {
      out.pointwise_agrees = false;
      break;
    }
  }
  return out;
}

}  // namespace lcmlab
