#pragma once
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace meinardus {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

// Deterministic parallel map: chunk layout depends only on n, never on the
// thread count, and per-index results are stored in place, so output bytes are
// identical for any --threads value.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned threads, F&& f) {
    std::vector<T> out(n);
    threads = resolve_threads(threads);
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::size_t chunk = (n + 255) / 256;
    if (chunk == 0) chunk = 1;
    std::size_t nchunks = (n + chunk - 1) / chunk;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            std::size_t lo = c * chunk, hi = std::min(n, lo + chunk);
            for (std::size_t i = lo; i < hi; ++i) out[i] = f(i);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

// Deterministic reduction: per-chunk partial sums combined strictly in chunk
// order.  The chunk size is a pure function of n.
template <class T, class F, class Comb>
T parallel_reduce(std::size_t n, unsigned threads, T init, F&& term, Comb&& combine) {
    threads = resolve_threads(threads);
    std::size_t chunk = (n + 255) / 256;
    if (chunk == 0) chunk = 1;
    std::size_t nchunks = (n + chunk - 1) / chunk;
    std::vector<T> partial(nchunks, init);
    auto fill = [&](std::size_t c) {
        std::size_t lo = c * chunk, hi = std::min(n, lo + chunk);
        T acc = init;
        for (std::size_t i = lo; i < hi; ++i) acc = combine(acc, term(i));
        partial[c] = acc;
    };
    if (threads <= 1 || nchunks < 2) {
        for (std::size_t c = 0; c < nchunks; ++c) fill(c);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t c = next.fetch_add(1);
                if (c >= nchunks) return;
                fill(c);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    T acc = init;
    for (std::size_t c = 0; c < nchunks; ++c) acc = combine(acc, partial[c]);
    return acc;
}

} // namespace meinardus
