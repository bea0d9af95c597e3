#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace nv::detail {

inline int resolve_threads(int requested) {
    if (requested > 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Splits [0, total) into per-thread contiguous chunks and runs
/// fn(chunk_index, begin, end) on each.  Chunk count and boundaries depend
/// only on (total, threads), so per-chunk results can be merged in chunk
/// order for deterministic output.
template <typename Fn>
void run_chunked(std::size_t total, int threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || total < 2) {
        fn(0, std::size_t{0}, total);
        return;
    }
    std::size_t chunks = static_cast<std::size_t>(threads);
    if (chunks > total)
        chunks = total;
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    std::size_t base = total / chunks;
    std::size_t extra = total % chunks;
    std::size_t begin = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t len = base + (c < extra ? 1 : 0);
        std::size_t end = begin + len;
        workers.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
        begin = end;
    }
    for (std::thread& t : workers)
        t.join();
}

} // namespace nv::detail
