#include "lcmlab/lcm_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace lcmlab {

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt lcm2(const BigInt& a, const BigInt& b) {
  if (sgn(a) == 0 || sgn(b) == 0) return 0;
  BigInt out = abs(a) / gcd(a, b);
  out *= abs(b);
  return out;
}

RangeLcmRequest::RangeLcmRequest(Poly f_, std::int64_t m_, std::int64_t n_)
    : f(std::move(f_)), m(m_), n(n_) {
  if (m < 1 || m > n) throw std::invalid_argument("lcm range needs 1 <= m <= n");
}

RangeLcmRequest RangeLcmRequest::half(Poly f, std::int64_t n) {
  const auto [lo, hi] = half_range(n);
  return {std::move(f), lo, hi};
}

RangeLcmRequest RangeLcmRequest::full(Poly f, std::int64_t n) { return {std::move(f), 1, n}; }

std::pair<std::int64_t, std::int64_t> half_range(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("half_range needs n >= 1");
  return {(n + 1) / 2, n};
}

BigInt lcm_range(const RangeLcmRequest& req, const ReduceOptions& opts) {
  const auto width = static_cast<std::size_t>(req.n - req.m + 1);
  std::vector<BigInt> values(width);

  const unsigned threads = std::max(1u, opts.threads);
  if (threads > 1 && width > opts.width_threshold) {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (width + threads - 1) / threads;
    for (std::size_t begin = 0; begin < width; begin += chunk) {
      const std::size_t end = std::min(width, begin + chunk);
      workers.emplace_back([&, begin, end] {
        for (std::size_t i = begin; i < end; ++i) values[i] = abs(req.f.eval(req.m + static_cast<std::int64_t>(i)));
      });
    }
  } else {
    for (std::size_t i = 0; i < width; ++i) values[i] = abs(req.f.eval(req.m + static_cast<std::int64_t>(i)));
  }

  if (std::any_of(values.begin(), values.end(), [](const BigInt& v) { return sgn(v) == 0; })) return 0;
  return tree_reduce(std::span<const BigInt>(values), [](const BigInt& a, const BigInt& b) { return lcm2(a, b); },
                     opts);
}

BigInt lcm_one_to(std::int64_t n, const ReduceOptions& opts) {
  return lcm_range(RangeLcmRequest::full(Poly{0, 1}, n), opts);
}

PsiValue chebyshev_psi(std::int64_t n, const ReduceOptions& opts) {
  PsiValue out;
  out.n = n;
  out.lcm_value = lcm_one_to(n, opts);
  out.log_value = natural_log(out.lcm_value);
  out.bit_length = lcmlab::bit_length(out.lcm_value);
  return out;
}

}  // namespace lcmlab
