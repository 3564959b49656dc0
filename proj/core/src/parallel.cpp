#include "laguerre/parallel.hpp"

#include <algorithm>
#include <exception>
#include <cstdlib>
#include <thread>
#include <vector>

namespace laguerre {

int thread_count() {
    if (const char* env = std::getenv("LAGUERRE_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::size_t parallel_chunk_count(std::size_t n) {
    if (n == 0) return 0;
    return std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
}

void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    const std::size_t workers = parallel_chunk_count(n);
    if (workers <= 1) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    const std::size_t base = n / workers;
    const std::size_t extra = n % workers;
    std::size_t begin = 0;
    for (std::size_t c = 0; c < workers; ++c) {
        const std::size_t len = base + (c < extra ? 1 : 0);
        pool.emplace_back([&fn, &errors, c, begin, len] {
            try {
                fn(c, begin, begin + len);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
        begin += len;
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

}  // namespace laguerre
