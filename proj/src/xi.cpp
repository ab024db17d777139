#include "zetacensus/xi.hpp"

#include <cmath>

#include "zetacensus/gammafn.hpp"
#include "zetacensus/pseudo_gamma.hpp"
#include "zetacensus/zeta.hpp"

namespace zetacensus {

namespace {

constexpr double kLogPi = 1.1447298858494001741;
constexpr double kEulerGamma0 = 0.57721566490153286061;
constexpr double kStieltjes1 = -0.072815845483676724861;

// log of pi^{-s/2} (s/2) Gamma(s/2), the zeta-free part of xi.
Cplx log_xi_gamma_part(const Cplx& s, const EvalOptions& opts) {
    return -0.5 * s * kLogPi + std::log(0.5 * s) + log_gamma(0.5 * s, opts);
}

// (s-1) zeta(s), with the pole cancellation expanded near s = 1.
Cplx zeta_z(const Cplx& s, const EvalOptions& opts) {
    const Cplx u = s - 1.0;
    if (std::abs(u) <= 1e-6)
        return 1.0 + kEulerGamma0 * u - kStieltjes1 * u * u;
    return u * zeta(s, opts);
}

Cplx xi_halfplane(const Cplx& s, const EvalOptions& opts) {
    return std::exp(log_xi_gamma_part(s, opts)) * zeta_z(s, opts);
}

} // namespace

Cplx xi(const Cplx& s, const EvalOptions& opts) {
    ensure_finite(s, "xi");
    opts.validate();
    if (s.real() < 0.5)
        return xi_halfplane(1.0 - s, opts);
    return xi_halfplane(s, opts);
}

Cplx xi_direct(const Cplx& s, const EvalOptions& opts) {
    ensure_finite(s, "xi_direct");
    opts.validate();
    if (std::abs(s) <= 1e-6)
        return xi_halfplane(1.0 - s, opts); // s Gamma(s/2) cancellation, via symmetry
    return xi_halfplane(s, opts);
}

double xi_critical_scaled(double t, const EvalOptions& opts) {
    ensure_finite(t, "xi_critical_scaled");
    opts.validate();
    const Cplx s{0.5, t};
    const Cplx lg = log_xi_gamma_part(s, opts);
    const Cplx scaled = std::exp(lg + 0.25 * 3.14159265358979323846 * t) * zeta_z(s, opts);
    return scaled.real();
}

Cplx xi_logderiv(const Cplx& s, const EvalOptions& opts) {
    ensure_finite(s, "xi_logderiv");
    opts.validate();
    if (s.real() < 0.5)
        return -xi_logderiv(1.0 - s, opts);
    return 1.0 / s + 1.0 / (s - 1.0) + 0.5 * digamma(0.5 * s, opts) - 0.5 * kLogPi +
           zeta_logderiv(s, opts);
}

namespace {

Cplx nabla_checked(const Cplx& s, const PseudoGammaParams& p) {
    const Cplx n = nabla(s, p);
    if (std::abs(n) < 1e-12)
        throw NearZeroDivision("ratio: nabla(s) vanishes within guard");
    return n;
}

} // namespace

Cplx ratio_B(const Cplx& s, const PseudoGammaParams& p, const EvalOptions& opts) {
    return xi(s, opts) / nabla_checked(s, p);
}

Cplx ratio_C(const Cplx& s, double X, const PseudoGammaParams& p, const EvalOptions& opts) {
    (void)opts;
    ensure_finite(X, "ratio_C");
    return nabla(2.0 - X + s, p) / nabla_checked(s, p);
}

Cplx ratio_Cprime(const Cplx& s, double x, const PseudoGammaParams& p, const EvalOptions& opts) {
    (void)opts;
    ensure_finite(x, "ratio_Cprime");
    if (!(x > -1.0 && x < 2.0))
        throw DomainError("ratio_Cprime: requires -1 < x < 2");
    return nabla(s + x, p) / nabla_checked(s, p);
}

Cplx d_symmetrized(const Cplx& s, double x, const PseudoGammaParams& p, const EvalOptions& opts) {
    ensure_finite(s, "d_symmetrized");
    if (!(x > 0.5 && x <= 2.0))
        throw DomainError("d_symmetrized: requires 1/2 < x <= 2");
    const Cplx a = x - 0.5 + s;
    const Cplx b = 0.5 - x + s;
    return 0.5 * (xi(a, opts) / nabla_checked(a, p) + xi(b, opts) / nabla_checked(b, p));
}

} // namespace zetacensus
