#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

#include "oscint/complex_arith.hpp"

namespace oscint::detail {

inline unsigned worker_count() {
  if (const char* env = std::getenv("OSCINT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Deterministic chunked reduction: splits [0, total) into fixed chunks,
/// evaluates chunk partial sums possibly in parallel, then adds them in chunk
/// order. The result is identical regardless of thread count.
template <class ChunkFn>  // Complex fn(std::int64_t begin, std::int64_t end)
Complex chunked_sum(int working_digits, std::int64_t total, std::int64_t chunk,
                    ChunkFn&& fn) {
  if (total <= 0) return Complex{};
  const std::int64_t nchunks = (total + chunk - 1) / chunk;
  const unsigned workers =
      std::min<std::int64_t>(worker_count(), nchunks);

  std::vector<Complex> parts(static_cast<std::size_t>(nchunks));
  if (workers <= 1) {
    ScopedPrecision guard(working_digits);
    for (std::int64_t c = 0; c < nchunks; ++c) {
      parts[static_cast<std::size_t>(c)] =
          fn(c * chunk, std::min(total, (c + 1) * chunk));
    }
  } else {
    std::atomic<std::int64_t> next{0};
    auto work = [&] {
      ScopedPrecision guard(working_digits);
      for (;;) {
        const std::int64_t c = next.fetch_add(1);
        if (c >= nchunks) break;
        parts[static_cast<std::size_t>(c)] =
            fn(c * chunk, std::min(total, (c + 1) * chunk));
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  ScopedPrecision guard(working_digits);
  Complex sum;
  for (auto& p : parts) sum += p;
  return sum;
}

}  // namespace oscint::detail
