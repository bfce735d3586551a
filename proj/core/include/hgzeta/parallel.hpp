// Copyright The hgzeta Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hgzeta {

// Splits [0, n) into one contiguous chunk per worker and calls
// fn(begin, end, worker). Chunk boundaries depend only on n and threads, so
// per-worker partial results reduce deterministically.
template <class Fn>
void parallel_chunks(std::uint64_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2 * static_cast<std::uint64_t>(threads)) {
    fn(std::uint64_t{0}, n, 0u);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::uint64_t step = (n + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    std::uint64_t b = std::min(n, w * step);
    std::uint64_t e = std::min(n, b + step);
    pool.emplace_back([&, b, e, w] {
      try {
        fn(b, e, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

inline unsigned worker_slots(std::uint64_t n, unsigned threads) {
  threads = std::max(1u, threads);
  return (threads == 1 || n < 2 * static_cast<std::uint64_t>(threads)) ? 1u : threads;
}

}  // namespace hgzeta
