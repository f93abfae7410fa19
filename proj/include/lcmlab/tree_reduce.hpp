#pragma once

#include <cstddef>
#include <future>
#include <span>
#include <utility>

namespace lcmlab {

struct ReduceOptions {
  /// Ranges no wider than this are folded sequentially.
  std::size_t width_threshold = 64;
  /// Upper bound on concurrently running tasks; 1 disables threading.
  unsigned threads = 1;
};

namespace detail {

template <typename T, typename Op>
T fold_left(std::span<const T> values, const Op& op) {
  T acc = values.front();
  for (std::size_t i = 1; i < values.size(); ++i) acc = op(acc, values[i]);
  return acc;
}

template <typename T, typename Op>
T tree_reduce_impl(std::span<const T> values, const Op& op, const ReduceOptions& opts, unsigned budget) {
  if (values.size() <= opts.width_threshold || values.size() < 2) return fold_left(values, op);
  const std::size_t mid = values.size() / 2;
  const auto left = values.first(mid);
  const auto right = values.subspan(mid);
  if (budget > 1) {
    const unsigned right_budget = budget / 2;
    auto right_result = std::async(std::launch::async, [&] {
      return tree_reduce_impl(right, op, opts, right_budget);
    });
    T left_result = tree_reduce_impl(left, op, opts, budget - right_budget);
    return op(left_result, right_result.get());
  }
  return op(tree_reduce_impl(left, op, opts, 1), tree_reduce_impl(right, op, opts, 1));
}

}  // namespace detail

/// Reduces a non-empty range with an associative operation by recursive
/// halving. The split points depend only on the size and width_threshold,
/// never on the thread count, so the combination order is fixed.
template <typename T, typename Op>
T tree_reduce(std::span<const T> values, const Op& op, const ReduceOptions& opts = {}) {
  return detail::tree_reduce_impl(values, op, opts, opts.threads == 0 ? 1u : opts.threads);
}

}  // namespace lcmlab
