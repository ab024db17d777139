#pragma once

#include "zetacensus/types.hpp"

namespace zetacensus {

// Entire comparison function sized like Gamma(s/2):
//   (1/8)[(R^{(s-1/2)/8} + R^{(1/2-s)/8})^4 + (R^{(s-1/2)/8} - R^{(1/2-s)/8})^4]
// which collapses to (cosh((s-1/2) log R / 2) + 3)/2; the collapsed form is what
// gets evaluated (no cancellation near sigma = 1/2). Real and in [1,2] on the
// critical line, symmetric under s <-> 1-s and conjugation.
Cplx nabla(const Cplx& s, const PseudoGammaParams& p);

} // namespace zetacensus
