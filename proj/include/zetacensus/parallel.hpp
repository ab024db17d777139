#pragma once

#include <cstddef>
#include <type_traits>

namespace zetacensus {

// 0 means "not forced": fall back to ZETA_CENSUS_THREADS, then hardware concurrency.
void set_thread_count(int n);
int thread_count();

// Runs f(i) for i in [0, n). Work is split into fixed index blocks so results
// written by index are identical for every thread count. f must be thread-safe.
template <typename F>
void parallel_for(std::size_t n, F&& f);

namespace detail {
void run_blocks(std::size_t n, void (*trampoline)(void*, std::size_t), void* ctx);
}

template <typename F>
void parallel_for(std::size_t n, F&& f) {
    using Fn = std::remove_reference_t<F>;
    auto trampoline = [](void* ctx, std::size_t i) { (*static_cast<Fn*>(ctx))(i); };
    detail::run_blocks(n, trampoline, &f);
}

} // namespace zetacensus
