#ifndef BCINTERP_PARALLEL_HPP
#define BCINTERP_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace bcinterp {

// Worker-count resolution: explicit request, else BCINTERP_WORKERS, else
// hardware parallelism.
inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BCINTERP_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Index-parallel map over pure jobs; results land at their own index, so
// the output is independent of the worker count and schedule.
inline void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  workers = resolve_workers(workers);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace bcinterp

#endif
