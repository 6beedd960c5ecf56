#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace isoquot {

// Worker count: ISOQUOT_THREADS if set and positive, else hardware concurrency.
int thread_count();

// Sum f(0..n-1) over contiguous chunks; partial sums are combined in index order.
template <class T, class F>
T parallel_sum(size_t n, F&& f, T zero) {
    size_t workers = static_cast<size_t>(thread_count());
    if (workers > n) workers = n;
    if (workers <= 1) {
        T acc = zero;
        for (size_t i = 0; i < n; ++i) acc += f(i);
        return acc;
    }
    std::vector<T> partial(workers, zero);
    std::vector<std::exception_ptr> errs(workers);
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                size_t lo = n * w / workers, hi = n * (w + 1) / workers;
                for (size_t i = lo; i < hi; ++i) partial[w] += f(i);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    T acc = zero;
    for (auto& p : partial) acc += p;
    return acc;
}

} // namespace isoquot
