#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace apnvsp {

/// Worker count: APNVSP_THREADS if set and positive, else the hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("APNVSP_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, total) into contiguous chunks and runs fn(begin, end) on each, one thread per chunk.
template <class Fn>
void parallel_ranges(std::uint64_t total, Fn&& fn, unsigned workers = thread_count()) {
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));
  if (workers <= 1) {
    fn(std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t step = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(total, w * step);
    const std::uint64_t end = std::min(total, begin + step);
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace apnvsp
