#ifndef OVOID_PARALLEL_HPP
#define OVOID_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace ovoid {

/// Thread count from OVOID_THREADS, or 1.
inline unsigned default_threads()
{
  if (const char* env = std::getenv("OVOID_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0)
        return static_cast<unsigned>(n);
    } catch (...) {
    }
  }
  return 1;
}

/// Runs work(shard, worker) for every shard in [0, shards). Each worker
/// index in [0, threads) is used by exactly one thread, so callers can keep
/// per-worker accumulators and merge them afterwards.
template <class Work>
void run_shards(std::size_t shards, unsigned threads, Work&& work)
{
  if (threads <= 1 || shards <= 1) {
    for (std::size_t s = 0; s < shards; ++s)
      work(s, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t s = next++; s < shards; s = next++)
        work(s, t);
    });
  }
  for (auto& th : pool)
    th.join();
}

} // namespace ovoid

#endif
