#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "vconf/enumeration.hpp"

namespace vconf::detail {

// Runs leaf(acc, builder) over every ray partition, one accumulator per shard.
// Shards are the choice prefixes of default_shard_depth; workers pull shards
// from a shared counter, so the per-shard results do not depend on `jobs`.
template <class Acc, class Leaf>
std::vector<Acc> run_sharded(const ClusterShape& shape, int jobs, Leaf leaf) {
  const auto prefixes = shard_prefixes(shape, default_shard_depth(shape));
  std::vector<Acc> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      RayBuilder builder(shape);
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= prefixes.size()) break;
        for (int c : prefixes[i]) builder.push(c);
        Acc& acc = results[i];
        for_each_completion(builder, [&](const RayBuilder& b) { leaf(acc, b); });
        for (std::size_t s = 0; s < prefixes[i].size(); ++s) builder.pop();
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(prefixes.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace vconf::detail
