#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rforge {

/// Runs fn(0..count-1) on up to `parallelism` threads. The first thrown
/// exception is rethrown on the caller's thread after all workers join.
template <typename Fn>
void parallel_for_each(std::size_t count, int parallelism, Fn fn) {
  if (count == 0) return;
  std::size_t workers =
      std::min<std::size_t>(parallelism < 1 ? 1 : static_cast<std::size_t>(parallelism),
                            count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace rforge
