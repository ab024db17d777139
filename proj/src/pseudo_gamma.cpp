#include "zetacensus/pseudo_gamma.hpp"

#include <cmath>

namespace zetacensus {

Cplx nabla(const Cplx& s, const PseudoGammaParams& p) {
    ensure_finite(s, "nabla");
    const Cplx w = (s - 0.5) * (0.5 * p.log_R());
    if (std::fabs(w.real()) > 700.0)
        throw Overflow("nabla: exponent out of binary64 range");
    return 0.5 * std::cosh(w) + 1.5;
}

} // namespace zetacensus
