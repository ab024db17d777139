#include "zetacensus/argtrack.hpp"

#include <algorithm>
#include <cmath>

#include "zetacensus/parallel.hpp"

namespace zetacensus {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
constexpr int kMaxDepth = 40;
constexpr int kInitialSamples = 17;

double principal_diff(double a_from, double a_to) {
    return std::remainder(a_to - a_from, kTwoPi);
}

struct Point {
    double u;
    Cplx f;
    double mod;
    double arg;
};

struct Tracker {
    const CplxFn& f;
    const Segment& seg;
    std::vector<Point> out;
    double zero_scale = 0.0;
    int max_depth_used = 0;

    Point eval(double u) const {
        const Cplx v = f(seg.at(u));
        ensure_finite(v, "track_argument: f");
        return {u, v, std::abs(v), std::arg(v)};
    }

    static bool dip(const Point& a, const Point& b) {
        return std::min(a.mod, b.mod) < 0.25 * std::max(a.mod, b.mod);
    }

    void check_zero(const Point& p) const {
        if (p.mod <= 1e-300)
            throw ZeroOnPath("track_argument: zero on path at parameter " + std::to_string(p.u));
    }

    // A step of 2 pi k +- eps between two samples aliases to eps and the
    // half-steps pi k +- eps/2 alias consistently with it, so neither the
    // step size nor additivity betrays it at that level. Halving again
    // funnels the step toward an odd multiple of pi, which does trip the
    // pi/2 rule. Hence: never accept an interval on its own quietness,
    // require its two children to test quiet as well.
    bool quiet(const Point& a, const Point& m, const Point& b) const {
        const double whole = principal_diff(a.arg, b.arg);
        const double left = principal_diff(a.arg, m.arg);
        const double right = principal_diff(m.arg, b.arg);
        return std::fabs(left) < 0.5 * kPi && std::fabs(right) < 0.5 * kPi &&
               std::fabs(left + right - whole) <= 1e-9 && !dip(a, m) && !dip(m, b);
    }

    // Emits all samples strictly between a and b (in order) into out.
    void refine(const Point& a, const Point& b, int depth) {
        max_depth_used = std::max(max_depth_used, depth);
        const Point m = eval(0.5 * (a.u + b.u));
        check_zero(m);
        if (quiet(a, m, b)) {
            const Point ml = eval(0.5 * (a.u + m.u));
            const Point mr = eval(0.5 * (m.u + b.u));
            check_zero(ml);
            check_zero(mr);
            if (quiet(a, ml, m) && quiet(m, mr, b)) {
                out.push_back(ml);
                out.push_back(m);
                out.push_back(mr);
                return;
            }
        }
        if (depth >= kMaxDepth) {
            const double local_min = std::min({a.mod, m.mod, b.mod});
            if (local_min < 1e-10 * zero_scale)
                throw ZeroOnPath("track_argument: modulus collapsed at parameter " +
                                 std::to_string(m.u));
            throw MaxDepthExceeded("track_argument: refinement depth exhausted");
        }
        refine(a, m, depth + 1);
        out.push_back(m);
        refine(m, b, depth + 1);
    }
};

} // namespace

ArgTrace track_argument(const CplxFn& f, const Segment& seg, const EvalOptions& opts) {
    opts.validate();
    Tracker tr{f, seg, {}, 0.0, 0};

    std::vector<Point> grid;
    grid.reserve(kInitialSamples);
    for (int i = 0; i < kInitialSamples; ++i) {
        const double u = static_cast<double>(i) / (kInitialSamples - 1);
        grid.push_back(tr.eval(u));
    }
    for (const auto& p : grid) {
        tr.check_zero(p);
        tr.zero_scale = std::max(tr.zero_scale, p.mod);
    }

    tr.out.push_back(grid.front());
    for (int i = 0; i + 1 < kInitialSamples; ++i) {
        tr.refine(grid[static_cast<std::size_t>(i)], grid[static_cast<std::size_t>(i) + 1], 0);
        tr.out.push_back(grid[static_cast<std::size_t>(i) + 1]);
    }

    ArgTrace trace;
    trace.samples.reserve(tr.out.size());
    trace.refinement_depth = tr.max_depth_used;
    double unwrapped = tr.out.front().arg;
    double min_mod = tr.out.front().mod;
    trace.samples.push_back({tr.out.front().u, tr.out.front().mod, unwrapped});
    for (std::size_t i = 1; i < tr.out.size(); ++i) {
        unwrapped += principal_diff(tr.out[i - 1].arg, tr.out[i].arg);
        min_mod = std::min(min_mod, tr.out[i].mod);
        trace.samples.push_back({tr.out[i].u, tr.out[i].mod, unwrapped});
    }
    trace.delta_arg = unwrapped - trace.samples.front().unwrapped_arg;
    trace.min_modulus = min_mod;
    return trace;
}

namespace {

// Proper crossing test for closed-contour validation; shared endpoints of
// adjacent segments are fine, anything else touching is not.
bool segments_cross(const Cplx& a, const Cplx& b, const Cplx& c, const Cplx& d) {
    const auto orient = [](const Cplx& p, const Cplx& q, const Cplx& r) {
        const double v = (q.real() - p.real()) * (r.imag() - p.imag()) -
                         (q.imag() - p.imag()) * (r.real() - p.real());
        return (v > 0.0) - (v < 0.0);
    };
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4)
        return true;
    const auto on = [&](const Cplx& p, const Cplx& q, const Cplx& r) {
        return orient(p, q, r) == 0 && std::min(p.real(), q.real()) <= r.real() &&
               r.real() <= std::max(p.real(), q.real()) &&
               std::min(p.imag(), q.imag()) <= r.imag() && r.imag() <= std::max(p.imag(), q.imag());
    };
    return on(a, b, c) || on(a, b, d) || on(c, d, a) || on(c, d, b);
}

} // namespace

int winding_number(const CplxFn& f, const Contour& c, const EvalOptions& opts) {
    if (!c.closed)
        throw DomainError("winding_number: contour must be closed");
    const std::size_t n = c.vertices.size();
    if (n < 3)
        throw DomainError("winding_number: need at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i)
        if (c.vertices[i] == c.vertices[(i + 1) % n])
            throw DomainError("winding_number: consecutive vertices coincide");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent)
                continue;
            if (segments_cross(c.vertices[i], c.vertices[(i + 1) % n], c.vertices[j],
                               c.vertices[(j + 1) % n]))
                throw DomainError("winding_number: contour self-intersects");
        }
    }

    std::vector<double> deltas(n, 0.0);
    parallel_for(n, [&](std::size_t i) {
        const Segment edge(c.vertices[i], c.vertices[(i + 1) % n]);
        deltas[i] = track_argument(f, edge, opts).delta_arg;
    });
    double total = 0.0;
    for (double d : deltas)
        total += d;

    const double w = total / kTwoPi;
    const double nearest = std::round(w);
    if (std::fabs(w - nearest) > 1e-3)
        throw NonIntegerWinding("winding_number: residual " + std::to_string(w - nearest) +
                                " from integer");
    return static_cast<int>(nearest);
}

SignChangeCount sign_change_count(const CplxFn& f, const Segment& seg, const EvalOptions& opts) {
    SignChangeCount out;
    out.trace = track_argument(f, seg, opts);

    // Scan real parts recovered from the trace (Re = modulus * cos arg); exact
    // zeros merge into the surrounding bracket.
    const auto re_at = [&](double u) { return f(seg.at(u)).real(); };
    const auto sample_re = [&](std::size_t i) {
        const auto& s = out.trace.samples[i];
        return s.modulus * std::cos(s.unwrapped_arg);
    };
    int m = 0;
    double prev_u = out.trace.samples.front().u;
    double prev_re = sample_re(0);
    int prev_sign = (prev_re > 0.0) - (prev_re < 0.0);
    for (std::size_t i = 1; i < out.trace.samples.size(); ++i) {
        const double u = out.trace.samples[i].u;
        const double re = sample_re(i);
        const int sign = (re > 0.0) - (re < 0.0);
        if (sign != 0 && prev_sign != 0 && sign != prev_sign) {
            // secondary bisection localizes the crossing to 1e-9 in parameter
            double lo = prev_u, hi = u;
            double flo = prev_re;
            while (hi - lo > 1e-9) {
                const double mid = 0.5 * (lo + hi);
                const double fm = re_at(mid);
                if ((fm > 0.0) == (flo > 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            ++m;
        }
        if (sign != 0) {
            prev_sign = sign;
            prev_u = u;
            prev_re = re;
        }
    }

    out.m = m;
    out.bound = (m + 1) * kPi;
    if (std::fabs(out.trace.delta_arg) > out.bound + 1e-6)
        throw Error("sign_change_count: |delta arg| exceeds (m+1) pi on the produced trace");
    return out;
}

int disk_zero_bound(const CplxFn& f, const Cplx& z0, double r, double R, int n_samples) {
    ensure_finite(z0, "disk_zero_bound");
    if (!(0.0 < r && r < R))
        throw DomainError("disk_zero_bound: requires 0 < r < R");
    if (n_samples < 8)
        throw DomainError("disk_zero_bound: need at least 8 samples");
    const double f0 = std::abs(f(z0));
    if (f0 == 0.0)
        throw ZeroAtCenter();

    std::vector<double> mods(static_cast<std::size_t>(n_samples), 0.0);
    parallel_for(static_cast<std::size_t>(n_samples), [&](std::size_t j) {
        const double theta = kTwoPi * static_cast<double>(j) / n_samples;
        mods[j] = std::abs(f(z0 + R * Cplx(std::cos(theta), std::sin(theta))));
    });
    double best = 0.0, best_theta = 0.0;
    for (std::size_t j = 0; j < mods.size(); ++j) {
        if (mods[j] > best) {
            best = mods[j];
            best_theta = kTwoPi * static_cast<double>(j) / n_samples;
        }
    }

    double span = kTwoPi / n_samples;
    for (int pass = 0; pass < 3; ++pass) {
        const double lo = best_theta - span;
        constexpr int kRefine = 16;
        std::vector<double> local(kRefine, 0.0);
        parallel_for(kRefine, [&](std::size_t j) {
            const double theta = lo + 2.0 * span * (static_cast<double>(j) + 0.5) / kRefine;
            local[j] = std::abs(f(z0 + R * Cplx(std::cos(theta), std::sin(theta))));
        });
        for (std::size_t j = 0; j < local.size(); ++j) {
            const double theta = lo + 2.0 * span * (static_cast<double>(j) + 0.5) / kRefine;
            if (local[j] > best) {
                best = local[j];
                best_theta = theta;
            }
        }
        span /= 8.0;
    }

    return static_cast<int>(std::floor(std::log(best / f0) / std::log(R / r)));
}

} // namespace zetacensus
