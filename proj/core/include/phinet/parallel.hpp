#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace phinet {

// Evaluates fn(i) for i in [0, count) on a small worker pool and returns the
// results in index order. If any call throws, the exception of the lowest
// failing index is rethrown after all workers finish.
template <typename Fn>
auto parallel_map(std::size_t count, Fn&& fn, unsigned workers = 0) {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace phinet
