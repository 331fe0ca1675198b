#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace floq {

//! Worker cap: FLOQ_THREADS if set, otherwise the hardware count.
inline int worker_count() {
  if (const char* env = std::getenv("FLOQ_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? (int)hw : 1;
}

//! Parallel map over [0, count). fn(i) must write only to its own slot, so
//! results are deterministic regardless of the worker count.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
  int workers = (int)std::min<size_t>((size_t)worker_count(), count ? count : 1);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mx;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      try {
        for (size_t i; (i = next.fetch_add(1)) < count;) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mx);
        if (!err) err = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace floq
