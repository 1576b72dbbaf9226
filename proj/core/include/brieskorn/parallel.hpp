#ifndef BRIESKORN_PARALLEL_HPP
#define BRIESKORN_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace brieskorn {

// Worker count from the BRIESKORN_THREADS environment variable; defaults to 1
// and never exceeds hardware concurrency.
int thread_count();

// Run fn(i) for i in [begin, end).  Work is split into contiguous chunks, one
// per worker; every fn(i) must write only to its own slot so results do not
// depend on the thread count.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)> &fn);

} // namespace brieskorn

#endif // BRIESKORN_PARALLEL_HPP
