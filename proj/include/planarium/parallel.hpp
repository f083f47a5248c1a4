#pragma once

// Contiguous-range work splitting. Workers own disjoint index ranges and
// write to disjoint slots, so callers merge results in index order and the
// output is identical for any thread count. The first exception thrown by
// any worker is rethrown on the calling thread after the join.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace planarium {

template <class Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        fn(std::size_t{0}, n);
        return;
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::size_t per = n / threads, extra = n % threads, begin = 0;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t len = per + (t < extra ? 1 : 0);
        pool.emplace_back([&fn, &first_error, &error_mutex, begin, len] {
            try {
                fn(begin, begin + len);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
        begin += len;
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace planarium
