#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace veigar {

/// Worker count: hardware concurrency capped by the VEIGAR_THREADS
/// environment variable (values < 1 mean single-threaded).
inline int thread_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("VEIGAR_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

/// Runs fn(begin, end, chunk_index) over static contiguous chunks of
/// [0, count). Chunk boundaries depend only on count and the worker count,
/// so per-chunk partial results can be merged in a fixed order.
inline int parallel_chunks(int count, const std::function<void(int, int, int)>& fn) {
    const int workers = std::min(thread_count(), std::max(count, 1));
    if (workers <= 1 || count <= 1) {
        fn(0, count, 0);
        return 1;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const int base = count / workers;
    const int extra = count % workers;
    int begin = 0;
    for (int i = 0; i < workers; ++i) {
        const int len = base + (i < extra ? 1 : 0);
        const int end = begin + len;
        threads.emplace_back([&fn, begin, end, i] { fn(begin, end, i); });
        begin = end;
    }
    for (auto& t : threads) t.join();
    return workers;
}

} // namespace veigar
