#pragma once

#include "zetacensus/types.hpp"

namespace zetacensus {

// Stirling remainder g(s): log Gamma(s) = (s-1/2) log s - s + (1/2) log 2pi + g(s).
// Computed as the integral of ({v}-{v}^2)/2 against 1/(v+s)^2, done exactly on
// unit intervals up to |s+N| >= quadrature_points, then by the asymptotic tail.
// Requires sigma >= 1/8.
Cplx binet_g(const Cplx& s, const EvalOptions& opts = {});
Cplx binet_g_deriv(const Cplx& s, const EvalOptions& opts = {});

// Principal log Gamma, continuous on the plane cut along the negative reals.
// sigma >= 4 directly by Stirling + binet_g; otherwise shifted up by the
// recurrence log Gamma(s) = log Gamma(s+n) - sum_j log(s+j).
Cplx log_gamma(const Cplx& s, const EvalOptions& opts = {});
Cplx gamma_fn(const Cplx& s, const EvalOptions& opts = {});

// d/ds log Gamma(s), same shift strategy.
Cplx digamma(const Cplx& s, const EvalOptions& opts = {});

// Closed-form asymptotic for Im log Gamma(s/2):
// (pi/4)(sigma-1) - (1/2)(sigma-1) arctan(sigma/t) + (t/2) log sqrt((sigma/2)^2+(t/2)^2) - t/2.
// The O(1/|s|) remainder is omitted by design. Requires t > 0, sigma > 1/8.
double im_loggamma_half_asym(const Cplx& s);

} // namespace zetacensus
