#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <future>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "qcomm/report.hpp"

namespace qcomm {

/// Runs fn over every index in [0, count) across hardware threads and
/// returns the counterexample with the smallest index, if any. fn must
/// be pure and return an engaged optional to report a failure. Workers
/// scan contiguous chunks in ascending order and stop at their first
/// hit, and the merge keeps the smallest index, so the result does not
/// depend on scheduling.
template <class Fn>
std::optional<Counterexample> parallel_sweep(std::uint64_t count, const Fn& fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = (unsigned)std::min<std::uint64_t>(workers, std::max<std::uint64_t>(count, 1));
  std::atomic<std::uint64_t> best{count};
  std::mutex mu;
  std::optional<Counterexample> out;
  std::uint64_t chunk = (count + workers - 1) / workers;
  std::vector<std::future<void>> futs;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t lo = (std::uint64_t)w * chunk;
    std::uint64_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    futs.push_back(std::async(std::launch::async, [&, lo, hi] {
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (best.load(std::memory_order_relaxed) <= i) return;
        std::optional<Counterexample> ce = fn(i);
        if (!ce) continue;
        std::lock_guard<std::mutex> lock(mu);
        if (i < best.load(std::memory_order_relaxed)) {
          best.store(i, std::memory_order_relaxed);
          out = std::move(ce);
        }
        return;
      }
    }));
  }
  for (auto& f : futs) f.get();
  return out;
}

}  // namespace qcomm
