#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace equiloc {

// Worker count: EQUILOC_THREADS when set, otherwise all cores.
inline unsigned worker_count() {
    if (const char* env = std::getenv("EQUILOC_THREADS")) {
        long n = std::atol(env);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Evaluates f(0..n-1) into an index-ordered vector. Results are merged in
// index order, so the output is identical for any worker count.
template <class T, class F>
std::vector<T> parallel_map(size_t n, F f) {
    std::vector<T> out(n);
    unsigned workers = worker_count();
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers && w < n; ++w)
        pool.emplace_back([&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= n) break;
                out[i] = f(i);
            }
        });
    for (auto& t : pool) t.join();
    return out;
}

} // namespace equiloc
