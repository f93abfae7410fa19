#include "lcmlab/bounds.hpp"

#include <stdexcept>

namespace lcmlab {

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::MainTheorem: return "main-theorem";
    case BoundKind::LemmaKey: return "lemma-key";
    case BoundKind::Key1: return "key1";
    case BoundKind::Key2: return "key2";
    case BoundKind::Lemma22: return "lemma22";
    case BoundKind::Nair: return "nair";
    case BoundKind::Hanson: return "hanson";
    case BoundKind::HalfRangeLn: return "half-range-ln";
  }
  return "unknown";
}

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::GreaterEqual: return ">=";
    case Relation::Greater: return ">";
    case Relation::Less: return "<";
    case Relation::Equal: return "==";
  }
  return "?";
}

std::string_view to_string(RangeMode mode) { return mode == RangeMode::Half ? "half" : "full"; }

std::string_view to_string(Key2Case c) { return c == Key2Case::Full ? "full" : "half"; }

bool Witness::evaluate() const {
  const int c = cmp(left, right);
  switch (relation) {
    case Relation::GreaterEqual: return c >= 0;
    case Relation::Greater: return c > 0;
    case Relation::Less: return c < 0;
    case Relation::Equal: return c == 0;
  }
  return false;
}

namespace {

BoundReport make_report(BoundKind kind, BigInt lhs, std::string rhs_description, Witness witness,
                        bool in_claimed_range = true) {
  BoundReport r;
  r.kind = kind;
  r.lhs = std::move(lhs);
  r.rhs_description = std::move(rhs_description);
  r.witness = std::move(witness);
  r.holds = r.witness.evaluate();
  r.in_claimed_range = in_claimed_range;
  return r;
}

void require_positive_degree(const Poly& f, std::string_view who) {
  const auto deg = f.degree();
  if (!deg || *deg == 0) throw std::invalid_argument(std::string(who) + ": polynomial must have degree >= 1");
}

std::int64_t ceil_half(std::int64_t n) { return (n + 1) / 2; }

}  // namespace

BoundReport main_theorem_check(const Poly& f, std::int64_t n, RangeMode mode, const ReduceOptions& opts) {
  require_positive_degree(f, "main_theorem_check");
  if (!f.has_nonneg_coeffs()) throw std::invalid_argument("main_theorem_check: coefficients must be nonnegative");
  const auto req = mode == RangeMode::Half ? RangeLcmRequest::half(f, n) : RangeLcmRequest::full(f, n);
  BigInt lcm = lcm_range(req, opts);
  return make_report(BoundKind::MainTheorem, lcm, "2^" + std::to_string(n),
                     Witness{lcm, pow2(static_cast<std::uint64_t>(n)), Relation::GreaterEqual});
}

BoundReport lemma_key_check(const Poly& f, std::int64_t m, std::int64_t n, const ReduceOptions& opts) {
  require_positive_degree(f, "lemma_key_check");
  const RangeLcmRequest req(f, m, n);
  const auto s = *f.degree();
  const auto width = static_cast<std::uint64_t>(n - m);

  BigInt lcm = lcm_range(req, opts);
  BigInt product = 1;
  for (std::int64_t k = m; k <= n; ++k) product *= abs(f.eval(k));

  BigInt left = ipow(lcm * factorial(width), s) * ipow(abs(f.leading()), width + 1);
  return make_report(BoundKind::LemmaKey, lcm, "prod |f(k)/a_s|^(1/s) / (n-m)!",
                     Witness{std::move(left), std::move(product), Relation::GreaterEqual});
}

BoundReport lemma22_holds(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("lemma22_holds needs n >= 1");
  const std::int64_t h = ceil_half(n);
  BigInt count = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(h)) * h;
  return make_report(BoundKind::Lemma22, count, "2^" + std::to_string(n),
                     Witness{count, pow2(static_cast<std::uint64_t>(n)), Relation::Greater}, n >= 7);
}

BoundReport key1_check(const Poly& f, std::int64_t m) {
  if (f.degree() != std::optional<std::size_t>{2}) throw std::invalid_argument("key1_check: degree must be 2");
  if (!f.has_nonneg_coeffs()) throw std::invalid_argument("key1_check: coefficients must be nonnegative");
  if (m < 2) throw std::invalid_argument("key1_check: m must be >= 2");
  BigInt lcm = lcm2(f.eval(m - 1), f.eval(m));
  BigInt mm1 = BigInt(m) * (m - 1);
  return make_report(BoundKind::Key1, lcm, "(m(m-1))^2 / (2m-1)",
                     Witness{lcm * (2 * m - 1), mm1 * mm1, Relation::GreaterEqual});
}

Key2Result key2_lcm(const BigInt& a, const BigInt& b) {
  if (sgn(a) <= 0 || sgn(b) <= 0) throw std::invalid_argument("key2_lcm: a and b must be positive");
  if (gcd(a, b) != 1) throw std::invalid_argument("key2_lcm: a and b must be coprime");
  const BigInt u = a, v = a + b, w = a + 2 * b;
  const BigInt product = u * v * w;

  BigInt direct = lcm2(lcm2(u, v), w);

  // lcm(u,v,w) = uvw gcd(u,v,w) / (gcd(u,v) gcd(v,w) gcd(u,w))
  BigInt via_identity = product * gcd(gcd(u, v), w) / (gcd(u, v) * gcd(v, w) * gcd(u, w));
  if (direct != via_identity) throw std::logic_error("key2_lcm: direct lcm disagrees with gcd identity");

  const BigInt g = gcd(u, w);
  Key2Result out;
  out.value = direct;
  if (g == 1) {
    out.which = Key2Case::Full;
  } else if (g == 2) {
    out.which = Key2Case::Half;
  } else {
    throw std::logic_error("key2_lcm: gcd(a, a+2b) is neither 1 nor 2");
  }
  const BigInt scaled = out.which == Key2Case::Full ? direct : BigInt(direct * 2);
  if (scaled != product) throw std::logic_error("key2_lcm: classification disagrees with lcm");
  return out;
}

BoundReport key2_check(const BigInt& a, const BigInt& b) {
  const Key2Result r = key2_lcm(a, b);
  const BigInt factor = r.which == Key2Case::Full ? 1 : 2;
  const BigInt product = a * (a + b) * (a + 2 * b);
  return make_report(BoundKind::Key2, r.value,
                     r.which == Key2Case::Full ? "a(a+b)(a+2b)" : "a(a+b)(a+2b)/2",
                     Witness{r.value * factor, product, Relation::Equal});
}

BoundReport nair_check(std::int64_t n) {
  BigInt lcm = lcm_one_to(n);
  return make_report(BoundKind::Nair, lcm, "2^" + std::to_string(n),
                     Witness{lcm, pow2(static_cast<std::uint64_t>(n)), Relation::GreaterEqual}, n >= 7);
}

BoundReport hanson_check(std::int64_t n) {
  BigInt lcm = lcm_one_to(n);
  return make_report(BoundKind::Hanson, lcm, "3^" + std::to_string(n),
                     Witness{lcm, ipow(3, static_cast<std::uint64_t>(n)), Relation::Less});
}

BoundReport half_range_ln_check(std::int64_t n) {
  BigInt lcm = lcm_range(RangeLcmRequest::half(Poly{0, 1}, n));
  return make_report(BoundKind::HalfRangeLn, lcm, "2^" + std::to_string(n - 1),
                     Witness{lcm, pow2(static_cast<std::uint64_t>(n - 1)), Relation::GreaterEqual});
}

}  // namespace lcmlab
