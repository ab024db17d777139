#include "zetacensus/census.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "zetacensus/argtrack.hpp"
#include "zetacensus/parallel.hpp"
#include "zetacensus/xi.hpp"

namespace zetacensus {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kStep = 0.05;            // base step 0.1, halved before use
constexpr double kFineStep = 0.1 / 32.0;
constexpr int kFinePerCell = 16;          // kStep / kFineStep
constexpr double kBracketWidth = 1e-9;
constexpr double kClearance = 0.05;
constexpr double kGapCensusCap = 1000.0;  // scaled xi stays representable here

// Samples of the scaled critical-line xi on the absolute grid t = i * kStep,
// plus fine resamples, finished bisections and residuals. Keyed to one set
// of evaluation options; changing them drops everything. Absolute-grid
// storage makes an extended scan bit-identical to a fresh one.
struct SampleCache {
    std::mutex mu;
    bool valid = false;
    EvalOptions opts;
    std::vector<double> coarse{0.0};  // [0] unused
    std::map<int, std::array<double, kFinePerCell - 1>> fine;
    std::map<std::pair<double, double>, std::pair<double, double>> bisected;
    std::map<double, double> residuals;
};

SampleCache& cache() {
    static SampleCache c;
    return c;
}

void ensure_opts(SampleCache& c, const EvalOptions& opts) {
    if (!c.valid || !(c.opts == opts)) {
        c.coarse.assign(1, 0.0);
        c.fine.clear();
        c.bisected.clear();
        c.residuals.clear();
        c.opts = opts;
        c.valid = true;
    }
}

void ensure_coarse(SampleCache& c, int n, const EvalOptions& opts) {
    const int have = static_cast<int>(c.coarse.size()) - 1;
    if (n <= have)
        return;
    std::vector<double> fresh(static_cast<std::size_t>(n - have));
    parallel_for(fresh.size(), [&](std::size_t k) {
        fresh[k] = xi_critical_scaled((have + 1 + static_cast<int>(k)) * kStep, opts);
    });
    c.coarse.insert(c.coarse.end(), fresh.begin(), fresh.end());
}

struct ScanPoint {
    double t;
    double v;
};

// Ordered samples over (0, T]: the coarse grid, fine resamples of every cell
// whose modulus dips below a quarter of its neighborhood, and T itself when
// it falls off the grid.
std::vector<ScanPoint> assemble_scan(SampleCache& c, double T, const EvalOptions& opts) {
    const int n = static_cast<int>(std::floor(T / kStep + 1e-9));
    ensure_coarse(c, n, opts);
    const auto mod = [&](int i) { return std::abs(c.coarse[static_cast<std::size_t>(i)]); };

    std::vector<int> flagged;
    for (int i = 1; i < n; ++i) {
        const double lo = std::min(mod(i), mod(i + 1));
        double hi = 0.0;
        for (int j = std::max(1, i - 1); j <= std::min(n, i + 2); ++j)
            hi = std::max(hi, mod(j));
        if (lo < 0.25 * hi)
            flagged.push_back(i);
    }

    std::vector<int> missing;
    for (int i : flagged)
        if (!c.fine.count(i))
            missing.push_back(i);
    if (!missing.empty()) {
        std::vector<std::array<double, kFinePerCell - 1>> vals(missing.size());
        parallel_for(missing.size() * (kFinePerCell - 1), [&](std::size_t k) {
            const std::size_t ci = k / (kFinePerCell - 1);
            const int sub = static_cast<int>(k % (kFinePerCell - 1)) + 1;
            vals[ci][static_cast<std::size_t>(sub - 1)] =
                xi_critical_scaled(missing[ci] * kStep + sub * kFineStep, opts);
        });
        for (std::size_t ci = 0; ci < missing.size(); ++ci)
            c.fine[missing[ci]] = vals[ci];
    }

    std::vector<ScanPoint> pts;
    pts.reserve(static_cast<std::size_t>(n) + flagged.size() * (kFinePerCell - 1) + 1);
    std::size_t next_flag = 0;
    for (int i = 1; i <= n; ++i) {
        pts.push_back({i * kStep, c.coarse[static_cast<std::size_t>(i)]});
        if (next_flag < flagged.size() && flagged[next_flag] == i) {
            const auto& fs = c.fine.at(i);
            for (int sub = 1; sub < kFinePerCell; ++sub)
                pts.push_back({i * kStep + sub * kFineStep, fs[static_cast<std::size_t>(sub - 1)]});
            ++next_flag;
        }
    }
    if (T - n * kStep > 1e-9)
        pts.push_back({T, xi_critical_scaled(T, opts)});
    return pts;
}

std::pair<double, double> bisect_bracket(double lo, double hi, const EvalOptions& opts) {
    double flo = xi_critical_scaled(lo, opts);
    for (int it = 0; it < 80 && hi - lo > kBracketWidth; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi))
            break;
        const double fm = xi_critical_scaled(mid, opts);
        if (fm == 0.0) {
            // landed dead on the zero: shrink a symmetric bracket around it
            const double a = mid - 0.4 * kBracketWidth;
            const double b = mid + 0.4 * kBracketWidth;
            if (xi_critical_scaled(a, opts) * xi_critical_scaled(b, opts) < 0.0)
                return {a, b};
            throw Error("census: could not bracket a flat zero near t = " + std::to_string(mid));
        }
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

// Core scan; the cache mutex must already be held.
std::vector<ZeroRecord> locate_locked(SampleCache& c, double T, const EvalOptions& opts) {
    std::vector<ZeroRecord> out;
    if (T < kStep)
        return out;
    const std::vector<ScanPoint> pts = assemble_scan(c, T, opts);

    std::vector<std::pair<double, double>> brackets;
    const ScanPoint* prev = nullptr;
    for (const auto& p : pts) {
        if (p.v == 0.0)
            continue;  // a dead-center sample; neighbors straddle the zero
        if (prev && (prev->v > 0.0) != (p.v > 0.0))
            brackets.push_back({prev->t, p.t});
        prev = &p;
    }

    std::vector<std::pair<double, double>> final_brackets(brackets.size());
    std::vector<char> cached(brackets.size(), 0);
    for (std::size_t i = 0; i < brackets.size(); ++i) {
        auto it = c.bisected.find(brackets[i]);
        if (it != c.bisected.end()) {
            final_brackets[i] = it->second;
            cached[i] = 1;
        }
    }
    parallel_for(brackets.size(), [&](std::size_t i) {
        if (!cached[i])
            final_brackets[i] = bisect_bracket(brackets[i].first, brackets[i].second, opts);
    });
    for (std::size_t i = 0; i < brackets.size(); ++i)
        if (!cached[i])
            c.bisected[brackets[i]] = final_brackets[i];

    out.resize(brackets.size());
    std::vector<char> have_res(brackets.size(), 0);
    for (std::size_t i = 0; i < brackets.size(); ++i) {
        ZeroRecord& z = out[i];
        z.index = static_cast<int>(i) + 1;
        z.bracket_lo = final_brackets[i].first;
        z.bracket_hi = final_brackets[i].second;
        z.gamma = 0.5 * (z.bracket_lo + z.bracket_hi);
        auto it = c.residuals.find(z.gamma);
        if (it != c.residuals.end()) {
            z.residual = it->second;
            have_res[i] = 1;
        }
    }
    parallel_for(out.size(), [&](std::size_t i) {
        if (!have_res[i])
            out[i].residual = std::abs(xi(Cplx(0.5, out[i].gamma), opts));
    });
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!have_res[i])
            c.residuals[out[i].gamma] = out[i].residual;

    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].gamma - out[i - 1].gamma < kFineStep)
            throw StepTooCoarse("census: zeros at t = " + std::to_string(out[i - 1].gamma) +
                                " and " + std::to_string(out[i].gamma) +
                                " are closer than the minimal scan step");
    return out;
}

std::vector<ZeroRecord> locate_cached(double T, const EvalOptions& opts) {
    auto& c = cache();
    std::scoped_lock lk(c.mu);
    ensure_opts(c, opts);
    return locate_locked(c, T, opts);
}

double nudged_height_impl(double y, const EvalOptions& opts, double clearance) {
    double cand = y;
    for (int rounds = 0; rounds < 1000; ++rounds) {
        const auto zeros = locate_cached(cand + clearance + 0.01, opts);
        bool clear = true;
        for (const auto& z : zeros)
            if (std::abs(z.gamma - cand) < clearance) {
                clear = false;
                break;
            }
        if (clear)
            return cand;
        cand += 0.05;
    }
    throw Error("nudged_height: no clear height found above " + std::to_string(y));
}

int rectangle_zero_count(double sig_lo, double sig_hi, double t_lo, double t_hi,
                         const EvalOptions& opts) {
    Contour rect;
    rect.vertices = {Cplx(sig_hi, t_lo), Cplx(sig_hi, t_hi), Cplx(sig_lo, t_hi),
                     Cplx(sig_lo, t_lo)};
    rect.closed = true;
    const int w = winding_number([&opts](const Cplx& s) { return xi(s, opts); }, rect, opts);
    return std::abs(w);
}

// For rectangles symmetric about the real axis, where zeros pair off as
// conjugates and the winding must come out even.
int rectangle_pair_count(double sig_lo, double sig_hi, double t_lo, double t_hi,
                         const EvalOptions& opts, const char* who) {
    const int w = rectangle_zero_count(sig_lo, sig_hi, t_lo, t_hi, opts);
    if (w % 2 != 0)
        throw Error(std::string(who) + ": winding " + std::to_string(w) +
                    " is odd, conjugate pairing is broken");
    return w / 2;
}

int census_count_below(double Y, const EvalOptions& opts) {
    const auto zeros = locate_cached(Y, opts);
    return static_cast<int>(zeros.size());
}

// Splits [t_lo, t_hi] until each window holding off-line excess is narrower
// than 0.1; nudges split heights off zero ordinates first. Sub-rectangles in
// the upper half plane are not conjugate-symmetric, so raw winding counts
// are compared against the census directly.
void localize_off_line(double X, double t_lo, double t_hi, int excess,
                       const EvalOptions& opts,
                       std::vector<std::pair<double, double>>& windows) {
    if (excess <= 0)
        return;
    if (t_hi - t_lo <= 0.1) {
        windows.push_back({t_lo, t_hi});
        return;
    }
    const double mid = nudged_height_impl(0.5 * (t_lo + t_hi), opts, kClearance);
    if (mid <= t_lo || mid >= t_hi) {
        windows.push_back({t_lo, t_hi});
        return;
    }
    const auto off_in = [&](double a, double b) {
        const int inside = rectangle_zero_count(1.0 - X, X, a, b, opts);
        int on_line = 0;
        for (const auto& z : locate_cached(b, opts))
            if (z.gamma > a)
                ++on_line;
        return inside - on_line;
    };
    const int lo_excess = off_in(t_lo, mid);
    localize_off_line(X, t_lo, mid, lo_excess, opts, windows);
    localize_off_line(X, mid, t_hi, excess - lo_excess, opts, windows);
}

} // namespace

std::vector<ZeroRecord> locate_critical_zeros(double T, const EvalOptions& opts,
                                              double height_cap) {
    opts.validate();
    if (!std::isfinite(T) || !(T > 2.0))
        throw DomainError("locate_critical_zeros: need 2 < T");
    if (T > height_cap)
        throw DomainError("locate_critical_zeros: T exceeds the height cap " +
                          std::to_string(height_cap));
    return locate_cached(T, opts);
}

double rvm_main_term(double T) {
    if (!std::isfinite(T) || !(T > kTwoPi))
        throw DomainError("rvm_main_term: need T > 2 pi");
    const double x = T / kTwoPi;
    return x * std::log(x) - x + 7.0 / 8.0;
}

int count_zeros_NT(double T, const EvalOptions& opts, double height_cap) {
    opts.validate();
    if (!std::isfinite(T) || !(T > 2.0))
        throw DomainError("count_zeros_NT: need 2 < T");
    if (T > height_cap)
        throw DomainError("count_zeros_NT: T exceeds the height cap " +
                          std::to_string(height_cap));
    const auto zeros = locate_cached(T + 2 * kClearance, opts);
    for (const auto& z : zeros)
        if (std::abs(z.gamma - T) < kClearance)
            throw ContourThroughZero(
                "count_zeros_NT: height " + std::to_string(T) + " passes within " +
                    std::to_string(kClearance) + " of the zero at t = " +
                    std::to_string(z.gamma),
                nudged_height_impl(T + 0.05, opts, kClearance));
    try {
        return rectangle_pair_count(-1.0, 2.0, -T, T, opts, "count_zeros_NT");
    } catch (const ZeroOnPath& e) {
        throw ContourThroughZero(std::string("count_zeros_NT: ") + e.what(),
                                 nudged_height_impl(T + 0.05, opts, kClearance));
    }
}

CensusResult build_census(double T, const EvalOptions& opts, double height_cap) {
    if (!std::isfinite(T) || !(T > kTwoPi))
        throw DomainError("build_census: need T > 2 pi");
    CensusResult r;
    r.height = T;
    r.zeros = locate_critical_zeros(T, opts, height_cap);
    r.count_by_winding = count_zeros_NT(T, opts, height_cap);
    if (r.count_by_winding != static_cast<int>(r.zeros.size())) {
        std::string where = r.zeros.empty()
                                ? std::string("below t = ") + std::to_string(T)
                                : "near t = " + std::to_string(r.zeros.back().gamma);
        throw Error("build_census: scan found " + std::to_string(r.zeros.size()) +
                    " zeros but the winding count is " + std::to_string(r.count_by_winding) +
                    "; a zero was missed or lies off the critical line " + where);
    }
    r.rvm_main = rvm_main_term(T);
    return r;
}

double min_zero_gap(double T, const EvalOptions& opts) {
    opts.validate();
    if (!std::isfinite(T) || !(T > 0.0))
        throw DomainError("min_zero_gap: need T > 0");
    if (2.0 * T > kGapCensusCap + 1e-9)
        throw CensusIncomplete("min_zero_gap: census is capped at height 1000, need 2T = " +
                               std::to_string(2.0 * T));
    const auto zeros = locate_cached(2.0 * T, opts);
    if (zeros.empty())
        return std::numeric_limits<double>::infinity();
    // zeros off the real axis come in 1/2 +- i gamma pairs; 1 - rho duplicates
    // them, so the distinct distances are consecutive gaps and 2 gamma_1
    double gap = 2.0 * zeros.front().gamma;
    for (std::size_t i = 1; i < zeros.size(); ++i)
        gap = std::min(gap, zeros[i].gamma - zeros[i - 1].gamma);
    return gap;
}

double epsilon_choice(double lambda, double T, const EvalOptions& opts) {
    if (!(lambda > 0.5 && lambda < 1.0))
        throw DomainError("epsilon_choice: need 1/2 < lambda < 1");
    const double gap = min_zero_gap(T, opts);
    const double m = std::min({gap / 5.0, (lambda - 0.5) / 2.0, T / 9.0});
    return 0.9 * m;
}

double epsilon_contour(double lambda, double T, const EvalOptions& opts) {
    double eps = epsilon_choice(lambda, T, opts);
    const auto zeros = locate_cached(T + 5.0 * eps + 1e-12, opts);
    for (const auto& z : zeros)
        if (z.gamma > T) {
            // contours live at heights up to T + 5 eps; when the first
            // ordinate above T lands inside that band, shrink once so the
            // band ends strictly below it
            if (z.gamma <= T + 5.0 * eps)
                eps = 0.9 * (z.gamma - T) / 5.0;
            break;
        }
    return eps;
}

double nudged_height(double y, const EvalOptions& opts, double clearance) {
    opts.validate();
    if (!std::isfinite(y) || !(y > 0.0))
        throw DomainError("nudged_height: need y > 0");
    if (!(clearance > 0.0) || clearance > 1.0)
        throw DomainError("nudged_height: clearance out of range");
    return nudged_height_impl(y, opts, clearance);
}

DensityCount density_breakdown(double lambda, double T, const EvalOptions& opts,
                               double height_cap) {
    opts.validate();
    if (!(lambda > 0.5 && lambda < 1.0))
        throw DomainError("density_breakdown: need 1/2 < lambda < 1");
    if (!std::isfinite(T) || !(T > 2.0))
        throw DomainError("density_breakdown: need 2 < T");
    if (T > height_cap)
        throw DomainError("density_breakdown: T exceeds the height cap " +
                          std::to_string(height_cap));
    DensityCount d;
    d.epsilon = epsilon_contour(lambda, T, opts);
    if (d.epsilon < 1e-8)
        throw DomainError("density_breakdown: epsilon rule cannot separate the contour "
                          "from the critical line at this lambda");
    d.X = lambda - d.epsilon;
    d.Y = T + d.epsilon;
    try {
        d.total = rectangle_pair_count(1.0 - d.X, d.X, -d.Y, d.Y, opts, "density_breakdown");
    } catch (const ZeroOnPath& e) {
        throw ContourThroughZero(std::string("density_breakdown: ") + e.what(),
                                 nudged_height_impl(T + 0.05, opts, kClearance));
    }
    const int on_line = census_count_below(d.Y, opts);
    d.off_line = d.total - on_line;
    if (d.off_line < 0)
        throw Error("density_breakdown: winding pairs " + std::to_string(d.total) +
                    " undercount the " + std::to_string(on_line) +
                    " critical-line zeros below Y = " + std::to_string(d.Y));
    if (d.off_line > 0)
        localize_off_line(d.X, 0.0, d.Y, d.off_line, opts, d.off_line_windows);
    return d;
}

int count_zeros_density(double lambda, double T, const EvalOptions& opts, double height_cap) {
    return density_breakdown(lambda, T, opts, height_cap).total;
}

void write_census_csv(std::ostream& out, const std::vector<ZeroRecord>& zeros) {
    out << "index,gamma,bracket_lo,bracket_hi,residual\n";
    char buf[192];
    for (const auto& z : zeros) {
        std::snprintf(buf, sizeof buf, "%d,%.15g,%.15g,%.15g,%.15g\n", z.index, z.gamma,
                      z.bracket_lo, z.bracket_hi, z.residual);
        out << buf;
    }
}

void clear_census_cache() {
    auto& c = cache();
    std::scoped_lock lk(c.mu);
    c.valid = false;
    c.coarse.assign(1, 0.0);
    c.fine.clear();
    c.bisected.clear();
    c.residuals.clear();
}

} // namespace zetacensus
