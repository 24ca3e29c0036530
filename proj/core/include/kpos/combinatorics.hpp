#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kpos/error.hpp"

namespace kpos {

/// C(n, k); 0 when k > n. Throws DomainError on overflow of 64 bits.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Calls fn(span of k strictly increasing indices in [0, n)) for every
/// k-subset, in lexicographic order. k = 0 visits the empty set once.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace kpos
