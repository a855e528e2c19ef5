#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace splitmerge {

// Worker count for replica loops: hardware concurrency, capped by the
// SPLITMERGE_THREADS environment variable and by the job count.
inline int worker_count(int jobs) {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("SPLITMERGE_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < hw) hw = cap;
  }
  return jobs < hw ? (jobs < 1 ? 1 : jobs) : hw;
}

// Runs body(i) for i in [0, count). Each index is executed exactly once;
// callers keep determinism by writing to per-index slots.
inline void parallel_for(int count, const std::function<void(int)>& body) {
  int workers = worker_count(count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  for (auto& t : pool) t.join();
}

// Splits [0, count) into one contiguous chunk per worker; body(begin, end)
// runs once per chunk. Useful when each worker owns scratch state (memo
// tables and the like).
inline void parallel_chunks(int count,
                            const std::function<void(int, int)>& body) {
  int workers = worker_count(count);
  if (workers <= 1) {
    if (count > 0) body(0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  int base = count / workers, extra = count % workers, begin = 0;
  for (int w = 0; w < workers; ++w) {
    int len = base + (w < extra ? 1 : 0);
    int end = begin + len;
    if (len > 0) pool.emplace_back([&body, begin, end] { body(begin, end); });
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace splitmerge
