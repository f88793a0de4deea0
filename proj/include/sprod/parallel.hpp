#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace sprod {

// Worker count for the parallel sums and contractions (default 1).
void set_threads(int n);
int threads();

namespace detail {
inline thread_local bool in_worker = false;
}

// Runs fn(i) for i in [0, n) on up to threads() workers with a static block
// schedule. Callers write into slot i only and reduce in index order, so the
// result never depends on the worker count.
template <class Fn>
void parallel_for(size_t n, Fn&& fn) {
    size_t w = std::min<size_t>(static_cast<size_t>(std::max(1, threads())), n);
    if (w <= 1 || detail::in_worker) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(w);
    size_t chunk = (n + w - 1) / w;
    for (size_t t = 0; t < w; ++t) {
        pool.emplace_back([&, t] {
            detail::in_worker = true;
            try {
                for (size_t i = t * chunk; i < std::min(n, (t + 1) * chunk); ++i) fn(i);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

} // namespace sprod
