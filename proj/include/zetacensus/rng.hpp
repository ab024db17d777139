#pragma once

#include <cstdint>
#include <random>

#include "zetacensus/types.hpp"

namespace zetacensus {

// Deterministic sampling helper: same seed, same sequence, on every platform
// we target (mt19937_64 output is specified exactly).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }
    Cplx in_rect(double sigma_lo, double sigma_hi, double t_lo, double t_hi) {
        const double re = uniform(sigma_lo, sigma_hi);
        const double im = uniform(t_lo, t_hi);
        return {re, im};
    }

private:
    std::mt19937_64 eng_;
};

} // namespace zetacensus
