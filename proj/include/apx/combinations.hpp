#pragma once

// Lexicographic k-subset enumeration and an ordered task runner. Scans split
// work by the first element of the subset; results come back in task order,
// so merged output never depends on the number of workers.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace apx {

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Advances c (strictly increasing, values < n) to the next k-subset in
/// lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

/// Visits every k-subset of [0, n) whose smallest element is `first`, in
/// lexicographic order. The visitor returns false to stop early. Returns
/// false iff stopped.
template <class Visit>
bool for_each_with_first(std::size_t n, std::size_t k, std::size_t first,
                         Visit&& visit) {
  if (k == 0 || first + k > n) return true;
  std::vector<std::size_t> c(k);
  c[0] = first;
  for (std::size_t j = 1; j < k; ++j) c[j] = first + j;
  while (true) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(c))) return false;
    // Advance positions 1..k-1 only.
    std::size_t i = k;
    while (i > 1 && c[i - 1] == n - k + i - 1) --i;
    if (i == 1) return true;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

/// Visits all k-subsets of [0, n) in lexicographic order.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k == 0) {
    std::vector<std::size_t> empty;
    return visit(static_cast<const std::vector<std::size_t>&>(empty));
  }
  for (std::size_t first = 0; first + k <= n; ++first) {
    if (!for_each_with_first(n, k, first, visit)) return false;
  }
  return true;
}

/// Runs fn(task, worker) for task in [0, tasks) on `workers` threads and
/// returns the results in task order. `skip(task)` is consulted before a task
/// starts; skipped tasks yield a default-constructed result. The first
/// exception thrown by any task is rethrown.
template <class Result, class Fn, class Skip>
std::vector<Result> run_ordered(std::size_t tasks, unsigned workers, Fn&& fn,
                                Skip&& skip) {
  std::vector<Result> results(tasks);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(
                                                         std::max<std::size_t>(tasks, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&](unsigned worker) {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks) return;
      if (skip(t)) continue;
      try {
        results[t] = fn(t, worker);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(tasks);
        return;
      }
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

template <class Result, class Fn>
std::vector<Result> run_ordered(std::size_t tasks, unsigned workers, Fn&& fn) {
  return run_ordered<Result>(tasks, workers, std::forward<Fn>(fn),
                             [](std::size_t) { return false; });
}

}  // namespace apx
