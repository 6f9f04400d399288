#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace edgeideal {

// Number of worker threads; EDGEIDEAL_THREADS overrides the hardware count.
unsigned worker_count();

// Runs body(worker, begin, end) over contiguous chunks of [0, count).  Chunk
// boundaries depend only on count and the worker count; callers merge
// per-worker results in worker order, so results are schedule-independent.
template <class F>
void parallel_chunks(std::size_t count, F&& body) {
  unsigned w = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<std::size_t>(1, count / 64))));
  if (w == 1) {
    body(0u, std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex m;
  for (unsigned k = 0; k < w; ++k) {
    std::size_t b = count * k / w, e = count * (k + 1) / w;
    threads.emplace_back([&, k, b, e] {
      try {
        body(k, b, e);
      } catch (...) {
        std::lock_guard<std::mutex> lock(m);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace edgeideal
