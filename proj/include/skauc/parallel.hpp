#pragma once

#include <omp.h>

#include <atomic>
#include <cstddef>

namespace skauc {

// Worker budget for every parallel region in the library. 0 = OpenMP default.
// All parallel loops are written so that each output element is accumulated
// sequentially by exactly one worker; results are bitwise identical for any
// thread count.
inline std::atomic<int>& thread_budget() {
  static std::atomic<int> budget{0};
  return budget;
}

inline void set_thread_count(int n) { thread_budget().store(n > 0 ? n : 0); }

inline int resolved_thread_count() {
  const int n = thread_budget().load(std::memory_order_relaxed);
  return n > 0 ? n : omp_get_max_threads();
}

template <typename Body>
void parallel_for(std::ptrdiff_t n, Body&& body) {
  const int threads = resolved_thread_count();
  if (threads <= 1 || n < 2) {
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    return;
  }
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

}  // namespace skauc
