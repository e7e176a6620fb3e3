#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace spmx {

/// Splits [0, total) into `workers` contiguous shards and runs
/// fn(shard, begin, end) on each, one thread per shard. Shard boundaries
/// depend only on (total, workers), so any per-shard results merged in
/// shard order are identical for every worker count.
inline void parallel_shards(std::uint64_t total, int workers,
                            const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
  if (workers < 1) workers = 1;
  const auto shards = static_cast<std::uint64_t>(workers) < total
                          ? static_cast<std::uint64_t>(workers)
                          : (total > 0 ? total : 1);
  if (shards <= 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(shards));
  const std::uint64_t chunk = total / shards;
  const std::uint64_t rest = total % shards;
  std::uint64_t begin = 0;
  for (std::uint64_t s = 0; s < shards; ++s) {
    const std::uint64_t end = begin + chunk + (s < rest ? 1 : 0);
    pool.emplace_back(fn, static_cast<int>(s), begin, end);
    begin = end;
  }
  for (auto& t : pool) t.join();
}

/// Worker count from the environment (name) or the hardware, at least 1.
int default_workers(const char* env_var = "SPMX_WORKERS");

}  // namespace spmx
