#include "zetacensus/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zetacensus {

namespace {
std::atomic<int> g_forced{0};
}

void set_thread_count(int n) {
    g_forced.store(n > 0 ? n : 0);
}

int thread_count() {
    const int forced = g_forced.load();
    if (forced > 0)
        return forced;
    if (const char* env = std::getenv("ZETA_CENSUS_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace detail {

void run_blocks(std::size_t n, void (*trampoline)(void*, std::size_t), void* ctx) {
    if (n == 0)
        return;
    const int workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            trampoline(ctx, i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    // Block size is fixed by n alone so the i -> worker mapping never affects
    // results written by index.
    const std::size_t block = std::max<std::size_t>(1, n / (4 * static_cast<std::size_t>(workers)));

    auto body = [&]() {
        for (;;) {
            const std::size_t lo = next.fetch_add(block);
            if (lo >= n)
                return;
            const std::size_t hi = std::min(n, lo + block);
            try {
                for (std::size_t i = lo; i < hi; ++i)
                    trampoline(ctx, i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(body);
    body();
    for (auto& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace detail
} // namespace zetacensus
