#pragma once

#include "zetacensus/types.hpp"

namespace zetacensus {

// zeta(s). Below |t| = em_cutoff_t: globally convergent alternating double sum
// with adaptive truncation. Above: Euler-Maclaurin with Bernoulli corrections
// through order 8 and an adaptively enlarged main sum.
Cplx zeta(const Cplx& s, const EvalOptions& opts = {});

// zeta'(s)/zeta(s) by term-wise differentiation of whichever series zeta uses.
Cplx zeta_logderiv(const Cplx& s, const EvalOptions& opts = {});

// Real-axis cross-check oracle: s/(s-1) - s * integral_1^inf (v - floor(v)) v^{-s-1} dv,
// the integral done exactly on each unit interval plus an analytic tail.
double zeta_integral_real(double sigma, const EvalOptions& opts = {});

namespace detail {
struct ZetaPair {
    Cplx value;
    Cplx deriv;
};
ZetaPair zeta_with_deriv(const Cplx& s, const EvalOptions& opts);
ZetaPair zeta_alternating(const Cplx& s, const EvalOptions& opts);
ZetaPair zeta_euler_maclaurin(const Cplx& s, const EvalOptions& opts);
} // namespace detail

} // namespace zetacensus
