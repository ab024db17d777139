#pragma once

#include <functional>
#include <vector>

#include "zetacensus/types.hpp"

namespace zetacensus {

struct Segment {
    Cplx start;
    Cplx end;

    Segment(const Cplx& a, const Cplx& b) : start(a), end(b) {
        ensure_finite(a, "Segment");
        ensure_finite(b, "Segment");
        if (a == b)
            throw DomainError("Segment: endpoints must differ");
    }
    Cplx at(double u) const { return start + u * (end - start); }
};

struct Contour {
    std::vector<Cplx> vertices;
    bool closed = false;
};

struct ArgSample {
    double u;             // parameter in [0,1]
    double modulus;       // |f| at the sample
    double unwrapped_arg; // continuous argument

    bool operator==(const ArgSample&) const = default;
};

struct ArgTrace {
    std::vector<ArgSample> samples;
    double delta_arg = 0.0;
    double min_modulus = 0.0;
    int refinement_depth = 0;

    bool operator==(const ArgTrace&) const = default;
};

using CplxFn = std::function<Cplx(const Cplx&)>;

// Continuous argument of f along seg. Starts from 17 uniform samples and
// bisects any interval whose endpoint arguments differ by >= pi/2, whose
// modulus dips by more than 4x between endpoints, or whose principal jump
// fails to equal the sum of its half-interval jumps (the aliasing detector:
// a jump near a multiple of 2pi looks small but is not). An interval that
// looks quiet is still only accepted once both of its children test quiet,
// which funnels consistently aliased 2 pi k steps toward an odd multiple
// of pi where the pi/2 rule trips. Assumes f holomorphic and zero free on
// the path; phase excursions narrower than the refined sampling can in
// principle escape, as with any sampling-based tracker.
ArgTrace track_argument(const CplxFn& f, const Segment& seg, const EvalOptions& opts = {});

// Sum of delta_arg over the closed contour's segments divided by 2pi, asserted
// to be within 1e-3 of an integer.
int winding_number(const CplxFn& f, const Contour& c, const EvalOptions& opts = {});

struct SignChangeCount {
    int m = 0;
    double bound = 0.0; // (m+1) pi
    ArgTrace trace;
};

// Sign changes of Re f along seg, counted on the refined trace with a
// secondary bisection per bracket; also checks |delta_arg| <= (m+1) pi + 1e-6.
SignChangeCount sign_change_count(const CplxFn& f, const Segment& seg,
                                  const EvalOptions& opts = {});

// Upper bound floor(log(M / |f(z0)|) / log(R / r)) on the number of zeros of f
// in |z - z0| <= r, with M the sampled maximum of |f| on |z - z0| = R
// (n_samples points plus 3 refinement passes around the running maximum).
int disk_zero_bound(const CplxFn& f, const Cplx& z0, double r, double R, int n_samples = 720);

} // namespace zetacensus
