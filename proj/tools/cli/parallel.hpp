#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace kpos::cli {

/// Evaluates fn(i) for i in [0, count) on up to `threads` workers and hands
/// the results to sink(i, result) strictly in index order. Work proceeds in
/// blocks so the sink sees output while the run is still going.
template <class Fn, class Sink>
void ordered_map(std::size_t count, unsigned threads, Fn&& fn, Sink&& sink) {
  using Result = decltype(fn(std::size_t{0}));
  threads = std::max(1u, threads);
  const std::size_t block = threads == 1 ? 1 : static_cast<std::size_t>(threads) * 32;
  for (std::size_t begin = 0; begin < count; begin += block) {
    const std::size_t end = std::min(count, begin + block);
    if (threads == 1) {
      for (std::size_t i = begin; i < end; ++i) sink(i, fn(i));
      continue;
    }
    std::vector<std::optional<Result>> results(end - begin);
    std::vector<std::exception_ptr> errors(end - begin);
    std::atomic<std::size_t> next{begin};
    auto work = [&] {
      for (std::size_t i = next++; i < end; i = next++) {
        try {
          results[i - begin].emplace(fn(i));
        } catch (...) {
          errors[i - begin] = std::current_exception();
        }
      }
    };
    std::vector<std::jthread> pool;
    const std::size_t spawn = std::min<std::size_t>(threads, end - begin);
    for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(work);
    pool.clear();
    for (std::size_t i = begin; i < end; ++i) {
      if (errors[i - begin]) std::rethrow_exception(errors[i - begin]);
      sink(i, std::move(*results[i - begin]));
    }
  }
}

}  // namespace kpos::cli
