#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace insrobust {

/// Worker cap from INSROBUST_THREADS; 0 or unset-and-single-core means
/// sequential. Unset defaults to the hardware concurrency.
inline std::size_t worker_count_from_env() {
  if (const char* v = std::getenv("INSROBUST_THREADS")) {
    try {
      return static_cast<std::size_t>(std::stoul(v));
    } catch (const std::exception&) {
      return 0;
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(shard, begin, end) over `shards` contiguous slices of [0, total),
/// on up to `workers` threads. Shard boundaries depend only on `shards`, so
/// results merged by shard index are independent of the worker count.
template <typename Fn>
void for_each_shard(std::size_t total, std::size_t shards, std::size_t workers, Fn&& fn) {
  shards = std::max<std::size_t>(1, std::min(shards, std::max<std::size_t>(total, 1)));
  auto bounds = [&](std::size_t s) { return total / shards * s + std::min(s, total % shards); };
  if (workers <= 1) {
    for (std::size_t s = 0; s < shards; ++s) fn(s, bounds(s), bounds(s + 1));
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(shards);
  const std::size_t n_threads = std::min(workers, shards);
  for (std::size_t t = 0; t < n_threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t s = t; s < shards; s += n_threads) {
        try {
          fn(s, bounds(s), bounds(s + 1));
        } catch (...) {
          errors[s] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace insrobust
