#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace mapforge {

// Worker count for shardable enumerations. Defaults to MAPFORGE_JOBS, else 1.
int jobs();
void set_jobs(int n);

// Runs fn(shard) for shard in [0, count) on up to jobs() threads.
// Results come back indexed by shard so callers can reduce in a fixed order.
template <class R, class F>
std::vector<R> parallel_shards(std::size_t count, F fn) {
    std::vector<R> out(count);
    std::size_t workers = static_cast<std::size_t>(jobs());
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    if (workers > count) workers = count;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace mapforge
