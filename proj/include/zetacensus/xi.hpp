#pragma once

#include "zetacensus/types.hpp"

namespace zetacensus {

// xi(s) = pi^{-s/2} (s/2) Gamma(s/2) (s-1) zeta(s), entire, xi(0) = xi(1) = 1/2.
// For sigma < 1/2 evaluated as xi(1-s); within 1e-6 of s = 1 the factor
// (s-1) zeta(s) goes through its local expansion 1 + g0 (s-1) - g1 (s-1)^2.
Cplx xi(const Cplx& s, const EvalOptions& opts = {});

// Same product without the reflection shortcut, on any sigma the factors allow.
// The functional-equation suite compares this at s and 1-s; the public xi would
// make that comparison vacuous by construction.
Cplx xi_direct(const Cplx& s, const EvalOptions& opts = {});

// xi(1/2+it) e^{pi t / 4}: same sign and zeros as xi on the critical line but
// representable far past the point where xi itself underflows (t ~ 950).
double xi_critical_scaled(double t, const EvalOptions& opts = {});

// xi'(s)/xi(s) = 1/s + 1/(s-1) + (1/2) digamma(s/2) - (1/2) log pi + zeta'/zeta(s).
Cplx xi_logderiv(const Cplx& s, const EvalOptions& opts = {});

// Ratios against the pseudo Gamma function.
Cplx ratio_B(const Cplx& s, const PseudoGammaParams& p, const EvalOptions& opts = {});
Cplx ratio_C(const Cplx& s, double X, const PseudoGammaParams& p, const EvalOptions& opts = {});
Cplx ratio_Cprime(const Cplx& s, double x, const PseudoGammaParams& p,
                  const EvalOptions& opts = {});

// (1/2)[ xi/nabla at x-1/2+s  +  xi/nabla at 1/2-x+s ], for 1/2 < x <= 2.
Cplx d_symmetrized(const Cplx& s, double x, const PseudoGammaParams& p,
                   const EvalOptions& opts = {});

} // namespace zetacensus
