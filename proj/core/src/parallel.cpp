#include "brieskorn/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace brieskorn {

int thread_count() {
  const char *env = std::getenv("BRIESKORN_THREADS");
  if (env == nullptr || *env == '\0') {
    return 1;
  }
  const long v = std::strtol(env, nullptr, 10);
  if (v <= 1) {
    return 1;
  }
  const long hw = static_cast<long>(std::thread::hardware_concurrency());
  return static_cast<int>(hw > 0 && v > hw ? hw : v);
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)> &fn) {
  const std::size_t n = end > begin ? end - begin : 0;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
  if (workers <= 1) {
    for (std::size_t i = begin; i < end; ++i) {
      fn(i);
    }
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = begin + w * chunk;
    const std::size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) {
      break;
    }
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) {
        fn(i);
      }
    });
  }
  for (std::thread &t : pool) {
    t.join();
  }
}

} // namespace brieskorn

