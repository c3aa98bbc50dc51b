#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pcinv {

// Worker count used by the brute-force scans; 0 means hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

// Calls f(begin, end, worker) on contiguous chunks of [0, n). The first
// exception thrown by a worker is rethrown on the calling thread.
template <class F>
void parallel_chunks(std::size_t n, F&& f) {
  unsigned t = std::max(1U, std::min<unsigned>(thread_count(), static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (t == 1) {
    f(std::size_t{0}, n, 0U);
    return;
  }
  std::exception_ptr err;
  std::mutex m;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < t; ++w) {
      std::size_t b = n * w / t, e = n * (w + 1) / t;
      pool.emplace_back([&, b, e, w] {
        try {
          f(b, e, w);
        } catch (...) {
          std::lock_guard lk(m);
          if (!err) err = std::current_exception();
        }
      });
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace pcinv
