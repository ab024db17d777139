#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace zetacensus {

using Cplx = std::complex<double>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};
struct PoleAtOne : Error {
    PoleAtOne() : Error("zeta pole at s = 1") {}
    explicit PoleAtOne(const std::string& m) : Error(m) {}
};
struct PoleAtNonPositiveInteger : Error {
    PoleAtNonPositiveInteger() : Error("log_gamma pole at a non-positive integer") {}
};
struct NonConvergence : Error {
    using Error::Error;
};
struct NearZeroDivision : Error {
    using Error::Error;
};
struct Overflow : Error {
    using Error::Error;
};
struct ZeroOnPath : Error {
    using Error::Error;
};
struct MaxDepthExceeded : Error {
    using Error::Error;
};
struct NonIntegerWinding : Error {
    using Error::Error;
};
struct ZeroAtCenter : Error {
    ZeroAtCenter() : Error("disk bound requires f(z0) != 0") {}
};
struct StepTooCoarse : Error {
    using Error::Error;
};
struct ContourThroughZero : Error {
    double suggested_height;
    ContourThroughZero(const std::string& m, double suggested)
        : Error(m), suggested_height(suggested) {}
};
struct CensusIncomplete : Error {
    using Error::Error;
};

struct EvalOptions {
    double target_abs_err = 1e-12;
    int max_terms = 200000;
    double em_cutoff_t = 8.0;   // |t| above which the Euler-Maclaurin path takes over
    int quadrature_points = 48; // unit intervals resolved exactly in the Binet integral

    void validate() const {
        if (!(target_abs_err > 0.0))
            throw DomainError("EvalOptions: target_abs_err must be positive");
        if (max_terms < 16)
            throw DomainError("EvalOptions: max_terms must be at least 16");
        // the alternating-series prefactor has poles at |t| = 2 pi k / log 2
        // (about 9.065, 18.13, ...); keep the alternating band clear of them
        if (!(em_cutoff_t >= 0.0 && em_cutoff_t <= 9.0))
            throw DomainError("EvalOptions: em_cutoff_t must lie in [0, 9]");
        if (quadrature_points < 8)
            throw DomainError("EvalOptions: quadrature_points must be at least 8");
    }

    bool operator==(const EvalOptions&) const = default;
};

struct PseudoGammaParams {
    double Y;
    double R;

    explicit PseudoGammaParams(double height) : Y(height), R(9.0 * height / 5.0 + 0.5) {
        if (!(std::isfinite(height) && height > 2.0))
            throw DomainError("PseudoGammaParams: Y must be finite and exceed 2");
    }
    double log_R() const { return std::log(R); }
};

inline void ensure_finite(const Cplx& s, const char* where) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError(std::string(where) + ": non-finite argument");
}

inline void ensure_finite(double x, const char* where) {
    if (!std::isfinite(x))
        throw DomainError(std::string(where) + ": non-finite argument");
}

} // namespace zetacensus
