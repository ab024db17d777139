#include "zetacensus/gammafn.hpp"

#include <cmath>

namespace zetacensus {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;

int shift_count(const Cplx& s, double reach) {
    // Smallest n >= 0 with |s+n| >= reach; sigma > 0 makes |s+n| increasing in n.
    const double sigma = s.real();
    const double t = s.imag();
    if (sigma * sigma + t * t >= reach * reach)
        return 0;
    const double need = std::sqrt(reach * reach - t * t) - sigma;
    return std::max(0, static_cast<int>(std::ceil(need)));
}

// Exact value of integral_0^1 ((u-u^2)/2) / (u+a)^2 du.
Cplx binet_cell(const Cplx& a) {
    return (a + 0.5) * std::log(1.0 + 1.0 / a) - 1.0;
}

Cplx binet_cell_deriv(const Cplx& a) {
    return std::log(1.0 + 1.0 / a) - (a + 0.5) / (a * (a + 1.0));
}

// Asymptotic tail, |w| large: 1/12w - 1/360w^3 + 1/1260w^5 - 1/1680w^7,
// next term 1/1188w^9 bounds the error.
Cplx stirling_tail(const Cplx& w) {
    const Cplx iw2 = 1.0 / (w * w);
    return (1.0 / 12.0 - (1.0 / 360.0 - (1.0 / 1260.0 - 1.0 / 1680.0 * iw2) * iw2) * iw2) / w;
}

Cplx stirling_tail_deriv(const Cplx& w) {
    const Cplx iw2 = 1.0 / (w * w);
    return (-1.0 / 12.0 + (1.0 / 120.0 - (1.0 / 252.0 - 1.0 / 240.0 * iw2) * iw2) * iw2) * iw2;
}

void check_gamma_domain(const Cplx& s) {
    ensure_finite(s, "log_gamma");
    if (s.real() <= 0.5) {
        const double k = std::round(s.real());
        if (k <= 0.0 && std::abs(s - Cplx(k, 0.0)) < 1e-8)
            throw PoleAtNonPositiveInteger();
    }
}

} // namespace

Cplx binet_g(const Cplx& s, const EvalOptions& opts) {
    ensure_finite(s, "binet_g");
    opts.validate();
    if (s.real() < 0.125)
        throw DomainError("binet_g: requires sigma >= 1/8");
    const int n = shift_count(s, static_cast<double>(opts.quadrature_points));
    Cplx acc{0.0, 0.0};
    for (int j = 0; j < n; ++j)
        acc += binet_cell(s + static_cast<double>(j));
    return acc + stirling_tail(s + static_cast<double>(n));
}

Cplx binet_g_deriv(const Cplx& s, const EvalOptions& opts) {
    ensure_finite(s, "binet_g_deriv");
    opts.validate();
    if (s.real() < 0.125)
        throw DomainError("binet_g_deriv: requires sigma >= 1/8");
    const int n = shift_count(s, static_cast<double>(opts.quadrature_points));
    Cplx acc{0.0, 0.0};
    for (int j = 0; j < n; ++j)
        acc += binet_cell_deriv(s + static_cast<double>(j));
    return acc + stirling_tail_deriv(s + static_cast<double>(n));
}

Cplx log_gamma(const Cplx& s, const EvalOptions& opts) {
    check_gamma_domain(s);
    opts.validate();
    const int n = std::max(0, static_cast<int>(std::ceil(4.0 - s.real())));
    const Cplx w = s + static_cast<double>(n);
    Cplx lg = (w - 0.5) * std::log(w) - w + kHalfLog2Pi + binet_g(w, opts);
    for (int j = 0; j < n; ++j)
        lg -= std::log(s + static_cast<double>(j));
    return lg;
}

Cplx gamma_fn(const Cplx& s, const EvalOptions& opts) {
    return std::exp(log_gamma(s, opts));
}

Cplx digamma(const Cplx& s, const EvalOptions& opts) {
    check_gamma_domain(s);
    opts.validate();
    const int n = std::max(0, static_cast<int>(std::ceil(4.0 - s.real())));
    const Cplx w = s + static_cast<double>(n);
    Cplx psi = std::log(w) - 0.5 / w + binet_g_deriv(w, opts);
    for (int j = 0; j < n; ++j)
        psi -= 1.0 / (s + static_cast<double>(j));
    return psi;
}

double im_loggamma_half_asym(const Cplx& s) {
    ensure_finite(s, "im_loggamma_half_asym");
    const double sigma = s.real();
    const double t = s.imag();
    if (!(t > 0.0))
        throw DomainError("im_loggamma_half_asym: requires t > 0");
    if (!(sigma > 0.125))
        throw DomainError("im_loggamma_half_asym: requires sigma > 1/8");
    const double pi = 3.14159265358979323846;
    const double half_mod = std::sqrt(0.25 * sigma * sigma + 0.25 * t * t);
    return 0.25 * pi * (sigma - 1.0) - 0.5 * (sigma - 1.0) * std::atan(sigma / t) +
           0.5 * t * std::log(half_mod) - 0.5 * t;
}

} // namespace zetacensus
