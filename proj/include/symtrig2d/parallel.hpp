#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace symtrig2d {

// Worker cap: min(hardware_concurrency, SYMTRIG2D_THREADS if set).  A value
// of 1 disables spawning entirely.
inline unsigned thread_limit() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("SYMTRIG2D_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1 && v < 256) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return hw;
}

namespace detail {
inline constexpr std::size_t kBlock = 4096;
}

// Evaluates fn(i) for i in [0, count) across workers.  Indices are handed out
// in fixed-size blocks; fn must be safe to call concurrently for distinct i.
template <class Fn>
void for_each_index(std::size_t count, Fn&& fn) {
  unsigned workers = thread_limit();
  if (workers <= 1 || count < 2 * detail::kBlock) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      std::size_t begin = next.fetch_add(detail::kBlock);
      if (begin >= count) return;
      std::size_t end = std::min(begin + detail::kBlock, count);
      for (std::size_t i = begin; i < end; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

// Sum of term(i) over [0, count) with a result independent of the worker
// count: each fixed 4096-element block is summed left to right, block totals
// are combined in block order.
template <class T, class Fn>
T sum_terms(std::size_t count, Fn&& term) {
  std::size_t blocks = (count + detail::kBlock - 1) / detail::kBlock;
  if (blocks == 0) return T{};
  std::vector<T> partial(blocks, T{});
  for_each_index(blocks, [&](std::size_t b) {
    std::size_t begin = b * detail::kBlock;
    std::size_t end = std::min(begin + detail::kBlock, count);
    T acc{};
    for (std::size_t i = begin; i < end; ++i) acc += term(i);
    partial[b] = acc;
  });
  T total{};
  for (const T& p : partial) total += p;
  return total;
}

}  // namespace symtrig2d
