#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace bellcv {

// Static-chunked parallel loop over [0, n). Chunk boundaries depend only on n
// and grain, never on the worker count, so any per-chunk reduction done by the
// caller in chunk order is reproducible run to run.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                         std::size_t grain = 16) {
    if (n == 0) return;
    const std::size_t nchunks = (n + grain - 1) / grain;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const std::size_t nworkers = std::min<std::size_t>(hw, nchunks);
    if (nworkers <= 1) {
        body(0, n);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= nchunks) break;
            const std::size_t lo = c * grain;
            const std::size_t hi = std::min(n, lo + grain);
            body(lo, hi);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nworkers - 1);
    for (std::size_t t = 1; t < nworkers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

} // namespace bellcv
