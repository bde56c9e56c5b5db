#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace radmoore {

// Worker-pool width: RADMOORE_THREADS when set, otherwise the machine's
// hardware concurrency.
inline int worker_count() {
    if (const char* env = std::getenv("RADMOORE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(chunk_index, begin, end) over [0, total) split into fixed chunks.
// Chunk boundaries do not depend on the worker count, so per-chunk results
// merged in chunk order are deterministic.
template <class Fn>
void parallel_chunks(std::uint64_t total, int num_chunks, Fn&& fn) {
    if (total == 0 || num_chunks < 1) return;
    std::uint64_t chunks = static_cast<std::uint64_t>(num_chunks);
    if (chunks > total) chunks = total;
    auto bound = [&](std::uint64_t c) { return total * c / chunks; };

    int workers = worker_count();
    if (workers <= 1 || chunks == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) fn(c, bound(c), bound(c + 1));
        return;
    }
    std::atomic<std::uint64_t> counter{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::uint64_t c = counter.fetch_add(1);
                if (c >= chunks) return;
                fn(c, bound(c), bound(c + 1));
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace radmoore
