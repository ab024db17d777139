#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "zetacensus/checks.hpp"
#include "zetacensus/fit.hpp"

namespace zetacensus {
namespace detail {

// splitmix64: deterministic across standard libraries, unlike the
// distribution adapters.
struct SplitMix {
    std::uint64_t state;

    explicit SplitMix(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, 1)
    double next() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
};

inline void add_param(CheckReport& r, const char* key, double value) {
    r.params.emplace_back(key, value);
}

// Envelope regression for O(log x) claims: running max of |values| in grid
// order against log x. Callers archive slope/intercept/r2 in params and gate
// pass on fit quality plus a generous slope cap.
inline LinearFit envelope_log_fit(const std::vector<double>& xs,
                                  const std::vector<double>& values) {
    std::vector<double> lx(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        lx[i] = std::log(xs[i]);
    return fit_linear(lx, running_abs_max(values));
}

} // namespace detail
} // namespace zetacensus
