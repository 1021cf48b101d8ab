#ifndef SWG_SRC_PARALLEL_HPP
#define SWG_SRC_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace swg::detail {

/// Worker cap: hardware concurrency, optionally lowered by SWG_MAX_WORKERS.
inline int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  int w = hw ? static_cast<int>(hw) : 1;
  if (const char* env = std::getenv("SWG_MAX_WORKERS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < w) w = cap;
  }
  return w;
}

/// Runs f(i) for i in [0, count). f must only touch state owned by index i.
template <class F>
void parallel_for(std::size_t count, F&& f) {
  std::size_t workers = static_cast<std::size_t>(worker_count());
  if (workers > count) workers = count ? count : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t)
    threads.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        f(i);
      }
    });
  for (auto& th : threads) th.join();
}

}  // namespace swg::detail

#endif
