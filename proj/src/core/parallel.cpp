#include "actnet/core/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace actnet {

int thread_count() {
  static const int n = [] {
    if (const char* env = std::getenv("ACTNET_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(hw == 0 ? 1 : (hw > 16 ? 16 : hw));
  }();
  return n;
}

void parallel_for_chunks(int n_chunks, const std::function<void(int)>& fn) {
  const int nt = thread_count();
  if (nt <= 1 || n_chunks <= 1) {
    for (int c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int c = next.fetch_add(1);
      if (c >= n_chunks) break;
      fn(c);
    }
  };
  std::vector<std::thread> pool;
  const int spawn = (nt < n_chunks ? nt : n_chunks) - 1;
  pool.reserve(spawn);
  for (int i = 0; i < spawn; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace actnet
