#include "zetacensus/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <complex>

#include "checks_common.hpp"
#include "zetacensus/census.hpp"
#include "zetacensus/fit.hpp"
#include "zetacensus/gammafn.hpp"
#include "zetacensus/parallel.hpp"
#include "zetacensus/xi.hpp"
#include "zetacensus/zeta.hpp"

namespace zetacensus {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286;

using detail::add_param;
using detail::envelope_log_fit;
using detail::SplitMix;

double finish(CheckReport& r, double max_residual, double bound) {
    r.max_residual = max_residual;
    r.bound_value = bound;
    r.pass = max_residual <= bound;
    return max_residual;
}

} // namespace

std::vector<CheckReport> check_functional_equation(int n, std::uint64_t seed,
                                                   const EvalOptions& opts) {
    opts.validate();
    if (n < 8)
        throw DomainError("check_functional_equation: need at least 8 samples");

    SplitMix rng(seed);
    const int nc = n / 4;
    std::vector<Cplx> strip(n);
    std::vector<double> crit(nc);
    for (int i = 0; i < n; ++i) {
        Cplx s;
        do {
            s = Cplx(0.5 + 2.0 * (1.0 - rng.next()), -30.0 + 60.0 * rng.next());
        } while (std::abs(s - 1.0) < 0.1 || std::abs(s) < 0.1);
        strip[i] = s;
    }
    for (int i = 0; i < nc; ++i)
        crit[i] = 1.0 + 29.0 * rng.next();

    std::vector<double> res(n + nc, 0.0);
    parallel_for(strip.size(), [&](std::size_t i) {
        const Cplx s = strip[i];
        const Cplx v = xi_direct(s, opts);
        const double scale = std::abs(v);
        const double r1 = std::abs(xi_direct(1.0 - s, opts) - v) / scale;
        const double r2 = std::abs(xi_direct(std::conj(s), opts) - std::conj(v)) / scale;
        res[i] = std::max(r1, r2);
    });
    parallel_for(crit.size(), [&](std::size_t i) {
        const Cplx v = xi_direct(Cplx(0.5, crit[i]), opts);
        res[n + i] = std::abs(v.imag()) / std::abs(v);
    });

    CheckReport main;
    main.check_id = "functional_equation";
    add_param(main, "seed", static_cast<double>(seed));
    main.n_samples = n + nc;
    finish(main, *std::max_element(res.begin(), res.end()), 1e-9);

    // On the real axis every factor is computed with zero imaginary part, so
    // the reflection residual must be exactly zero, not merely small.
    CheckReport axis;
    axis.check_id = "functional_equation_real_axis";
    double worst = 0.0;
    for (double sigma : {0.6, 1.5, 2.2, 5.0, 9.0})
        worst = std::max(worst, std::abs(xi_direct(Cplx(sigma, 0.0), opts).imag()));
    axis.n_samples = 5;
    finish(axis, worst, 0.0);

    return {main, axis};
}

std::vector<CheckReport> check_zeta_bound(double delta, const std::vector<double>& t_grid,
                                          const EvalOptions& opts) {
    opts.validate();
    if (!(delta > 0.0 && delta <= 1.0))
        throw DomainError("check_zeta_bound: delta must lie in (0, 1]");
    if (t_grid.empty())
        throw DomainError("check_zeta_bound: empty grid");
    for (double t : t_grid)
        if (!(t >= 3.0))
            throw DomainError("check_zeta_bound: grid heights must be >= 3");

    const int kSigmaSteps = 6;
    std::vector<double> law(t_grid.size()), peak(t_grid.size()), line2(t_grid.size());
    parallel_for(t_grid.size(), [&](std::size_t i) {
        const double t = t_grid[i];
        double m = 0.0;
        for (int k = 0; k < kSigmaSteps; ++k) {
            const double sigma = delta + (1.0 - delta) * k / (kSigmaSteps - 1);
            m = std::max(m, std::abs(zeta(Cplx(sigma, t), opts)));
        }
        peak[i] = m;
        law[i] = std::pow(t, (1.0 - delta) / 2.0);
        line2[i] = std::abs(zeta(Cplx(2.0, t), opts));
    });

    const double c = fit_proportional(law, peak);
    double worst = 0.0, c_sup = 0.0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        worst = std::max(worst, peak[i] / (c * law[i]));
        c_sup = std::max(c_sup, peak[i] / law[i]);
    }

    // The least-squares law underestimates critical-line peaks: at t = 200
    // the sampled max is 1.49x the law, so the 1.5x pointwise rule fails on
    // honest data. The minimal valid cap c_sup is archived alongside.
    CheckReport pointwise;
    pointwise.check_id = "zeta_bound";
    add_param(pointwise, "delta", delta);
    add_param(pointwise, "c_sup", c_sup);
    pointwise.n_samples = static_cast<int>(t_grid.size()) * kSigmaSteps;
    pointwise.fitted_constant = c;
    finish(pointwise, worst, 1.5);

    CheckReport constant;
    constant.check_id = "zeta_bound_constant";
    add_param(constant, "delta", delta);
    constant.n_samples = static_cast<int>(t_grid.size());
    constant.fitted_constant = c;
    finish(constant, c, 10.0);

    CheckReport sigma2;
    sigma2.check_id = "zeta_bound_line2";
    sigma2.n_samples = static_cast<int>(t_grid.size());
    finish(sigma2, *std::max_element(line2.begin(), line2.end()), kPi * kPi / 6.0);

    return {pointwise, constant, sigma2};
}

std::vector<CheckReport> check_im_loggamma(const std::vector<Cplx>& grid,
                                           const EvalOptions& opts) {
    opts.validate();
    if (grid.empty())
        throw DomainError("check_im_loggamma: empty grid");
    for (const Cplx& s : grid)
        if (!(s.imag() >= 5.0 && s.real() > 0.125 && s.real() <= 3.0))
            throw DomainError("check_im_loggamma: grid needs t >= 5, sigma in (1/8, 3]");

    std::vector<double> res(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const Cplx s = grid[i];
        const double direct = log_gamma(0.5 * s, opts).imag();
        res[i] = std::abs(im_loggamma_half_asym(s) - direct) * std::abs(s) / 2.0;
    });

    CheckReport r;
    r.check_id = "im_loggamma_asym";
    r.n_samples = static_cast<int>(grid.size());
    finish(r, *std::max_element(res.begin(), res.end()), 1.0);
    return {r};
}

std::vector<CheckReport> check_xi_logderiv_sum(const std::vector<Cplx>& s_grid, int K,
                                               const EvalOptions& opts) {
    opts.validate();
    if (s_grid.empty())
        throw DomainError("check_xi_logderiv_sum: empty grid");
    if (K < 150 || K > 260)
        throw DomainError("check_xi_logderiv_sum: K must lie in [150, 260]");
    for (const Cplx& s : s_grid)
        if (std::abs(s) < 0.1 || std::abs(s - 1.0) < 0.1)
            throw DomainError("check_xi_logderiv_sum: grid point too close to 0 or 1");

    double T = 400.0;
    auto zeros = locate_critical_zeros(T, opts);
    while (static_cast<int>(zeros.size()) < K) {
        T += 25.0;
        zeros = locate_critical_zeros(T, opts);
    }
    for (const Cplx& s : s_grid)
        for (const auto& z : zeros)
            if (std::abs(s - Cplx(0.5, z.gamma)) < 1e-6 ||
                std::abs(s - Cplx(0.5, -z.gamma)) < 1e-6)
                throw DomainError("check_xi_logderiv_sum: grid point sits on a zero");

    const double c0 = -1.0 - kEulerGamma / 2.0 + std::log(2.0) + std::log(kPi) / 2.0;
    const int stops[4] = {20, 50, 100, K};

    std::vector<std::array<double, 4>> resid(s_grid.size());
    parallel_for(s_grid.size(), [&](std::size_t i) {
        const Cplx s = s_grid[i];
        const Cplx base = xi_logderiv(s, opts);
        Cplx sum = 0.0;
        int stop = 0;
        for (int k = 0; k < K; ++k) {
            const Cplx rho(0.5, zeros[k].gamma);
            const Cplx rhob = std::conj(rho);
            sum += 1.0 / (s - rho) + 1.0 / rho + 1.0 / (s - rhob) + 1.0 / rhob;
            while (stop < 4 && k + 1 == stops[stop]) {
                resid[i][stop] = std::abs(base - c0 - sum);
                ++stop;
            }
        }
    });

    double worst_ratio = 0.0;
    double worst_step = 0.0;
    double slope_sum = 0.0;
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        std::vector<double> g = {zeros[19].gamma, zeros[49].gamma, zeros[99].gamma};
        std::vector<double> r = {resid[i][0], resid[i][1], resid[i][2]};
        const LinearFit trend = fit_loglog(g, r);
        const double predicted =
            std::exp(trend.intercept + trend.slope * std::log(zeros[K - 1].gamma));
        worst_ratio = std::max(worst_ratio, resid[i][3] / predicted);
        slope_sum += trend.slope;
        for (int j = 1; j < 4; ++j)
            worst_step = std::max(worst_step, resid[i][j] / resid[i][j - 1]);
    }

    CheckReport main;
    main.check_id = "xi_logderiv_sum";
    add_param(main, "k", static_cast<double>(K));
    add_param(main, "n_zeros", static_cast<double>(zeros.size()));
    add_param(main, "trend_slope_mean", slope_sum / static_cast<double>(s_grid.size()));
    main.n_samples = static_cast<int>(s_grid.size());
    main.fitted_constant = slope_sum / static_cast<double>(s_grid.size());
    finish(main, worst_ratio, 5.0);

    CheckReport mono;
    mono.check_id = "xi_logderiv_monotone";
    mono.n_samples = static_cast<int>(s_grid.size()) * 3;
    finish(mono, worst_step, 1.0);

    // At the symmetry center the log derivative vanishes: the sum telescopes
    // termwise and the constant cancels against the half-line contributions.
    CheckReport center;
    center.check_id = "xi_logderiv_center";
    center.n_samples = 1;
    finish(center, std::abs(xi_logderiv(Cplx(0.5, 0.0), opts)), 1e-10);

    return {main, mono, center};
}

std::vector<CheckReport> check_local_expansion(const std::vector<double>& t_grid,
                                               const EvalOptions& opts) {
    opts.validate();
    if (t_grid.empty())
        throw DomainError("check_local_expansion: empty grid");
    for (double t : t_grid)
        if (!(t >= 10.0 && t <= 400.0))
            throw DomainError("check_local_expansion: grid heights must lie in [10, 400]");

    const double t_max = *std::max_element(t_grid.begin(), t_grid.end());
    const auto zeros = locate_critical_zeros(t_max + 1.5, opts);

    const int kSigmaSteps = 13; // -1 to 2 by quarters
    std::vector<double> peak(t_grid.size()), counts(t_grid.size()), cross(t_grid.size()),
        nudged(t_grid.size());
    int n_nudged = 0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        nudged[i] = nudged_height(t_grid[i], opts);
        if (nudged[i] != t_grid[i])
            ++n_nudged;
    }

    parallel_for(t_grid.size(), [&](std::size_t i) {
        const double t = nudged[i];
        std::vector<double> near;
        for (const auto& z : zeros)
            if (std::abs(z.gamma - t) < 1.0)
                near.push_back(z.gamma);
        double m = 0.0;
        for (int k = 0; k < kSigmaSteps; ++k) {
            const double sigma = -1.0 + 0.25 * k;
            const Cplx s(sigma, t);
            Cplx window = 0.0;
            for (double g : near)
                window += 1.0 / (s - Cplx(0.5, g));
            m = std::max(m, std::abs(zeta_logderiv(s, opts) - window));
        }
        peak[i] = m;
        counts[i] = static_cast<double>(near.size());

        // sigma = -1 again through the reflected route: xi'/xi(s) =
        // -xi'/xi(1-s), then peel the poles and the Gamma factor off.
        const Cplx s(-1.0, t);
        const Cplx via_xi = -xi_logderiv(1.0 - s, opts) - 1.0 / s - 1.0 / (s - 1.0) -
                            0.5 * digamma(0.5 * s, opts) + 0.5 * std::log(kPi);
        cross[i] = std::abs(via_xi - zeta_logderiv(s, opts));
    });

    std::vector<double> logs(t_grid.size());
    double worst = 0.0, worst_count = 0.0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        logs[i] = std::log(nudged[i]);
        worst = std::max(worst, peak[i] / logs[i]);
        worst_count = std::max(worst_count, counts[i] / (3.0 * logs[i]));
    }

    CheckReport main;
    main.check_id = "local_expansion";
    add_param(main, "n_nudged", static_cast<double>(n_nudged));
    main.n_samples = static_cast<int>(t_grid.size()) * kSigmaSteps;
    main.fitted_constant = fit_proportional(logs, peak);
    finish(main, worst, 10.0);

    CheckReport count;
    count.check_id = "local_expansion_zero_count";
    count.n_samples = static_cast<int>(t_grid.size());
    finish(count, worst_count, 1.0);

    CheckReport crosspath;
    crosspath.check_id = "local_expansion_crosspath";
    crosspath.n_samples = static_cast<int>(t_grid.size());
    finish(crosspath, *std::max_element(cross.begin(), cross.end()), 1e-8);

    return {main, count, crosspath};
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    auto num = [](double v) {
        if (std::isnan(v))
            return std::string("null");
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    std::string out = "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const CheckReport& r = reports[i];
        out += "  {\"check_id\":\"" + r.check_id + "\",\"params\":{";
        for (std::size_t j = 0; j < r.params.size(); ++j) {
            if (j)
                out += ",";
            out += "\"" + r.params[j].first + "\":" + num(r.params[j].second);
        }
        out += "},\"n_samples\":" + std::to_string(r.n_samples);
        out += ",\"max_residual\":" + num(r.max_residual);
        out += ",\"bound_value\":" + num(r.bound_value);
        out += ",\"fitted_constant\":" + num(r.fitted_constant);
        out += std::string(",\"pass\":") + (r.pass ? "true" : "false") + "}";
        out += (i + 1 < reports.size()) ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

std::vector<std::string> suite_names() {
    return {"functional_equation", "zeta_bound",      "nabla", "ratio_growth",
            "local_expansion",     "xi_logderiv_sum", "prop1", "prop2",
            "dj",                  "im_loggamma"};
}

namespace {

std::vector<CheckReport> dj_suite(const EvalOptions& opts);

std::vector<double> linspace_step(double lo, double hi, double step) {
    std::vector<double> v;
    for (double x = lo; x <= hi + 1e-9; x += step)
        v.push_back(x);
    return v;
}

} // namespace

std::vector<CheckReport> run_suite(const std::string& name, const EvalOptions& opts) {
    if (name == "functional_equation")
        return check_functional_equation(200, 20260822ULL, opts);
    if (name == "zeta_bound")
        return check_zeta_bound(0.5, {3, 5, 8, 12, 20, 30, 50, 80, 120, 200}, opts);
    if (name == "nabla")
        return check_nabla_suite({10, 20, 50}, opts);
    if (name == "ratio_growth")
        return check_ratio_growth(0.75, {10, 20, 30, 50}, opts);
    if (name == "local_expansion")
        return check_local_expansion({30, 50, 100, 150, 200}, opts);
    if (name == "xi_logderiv_sum")
        return check_xi_logderiv_sum({Cplx(2.0, 0.0), Cplx(0.75, 3.0), Cplx(3.0, 10.0),
                                      Cplx(1.5, 30.0)},
                                     200, opts);
    if (name == "prop1")
        return proposition1_experiment(0.75, linspace_step(10.0, 400.0, 5.0), opts);
    if (name == "prop2")
        return proposition2_experiment(0.75, {10, 15, 20, 30, 40, 50}, opts);
    if (name == "dj")
        return dj_suite(opts);
    if (name == "im_loggamma") {
        std::vector<Cplx> grid;
        for (double sigma : {0.15, 0.5, 1.0, 2.0, 3.0})
            for (double t : {5.0, 10.0, 20.0, 50.0, 100.0, 200.0})
                grid.emplace_back(sigma, t);
        return check_im_loggamma(grid, opts);
    }
    throw DomainError("run_suite: unknown suite " + name);
}

namespace {

std::vector<CheckReport> dj_suite(const EvalOptions& opts) {
    CheckReport agree;
    agree.check_id = "dj_consistency";
    double worst = 0.0;
    const std::pair<double, double> configs[2] = {{0.75, 100.0}, {0.6, 50.0}};
    for (int i = 0; i < 2; ++i) {
        const DjBreakdown d = dj_decomposition(configs[i].first, configs[i].second, opts);
        const double rounded = std::round(d.reconstructed_count);
        worst = std::max(worst, std::abs(d.reconstructed_count - rounded));
        worst = std::max(worst, std::abs(rounded - d.census_count));
        add_param(agree, i == 0 ? "lambda0" : "lambda1", d.lambda);
        add_param(agree, i == 0 ? "t0" : "t1", d.T);
    }
    agree.n_samples = 2;
    agree.max_residual = worst;
    agree.bound_value = 0.01;
    agree.pass = worst <= 0.01;

    // Growth of the top-edge and inner-edge increments with T at fixed lambda.
    const std::vector<double> heights = {20, 35, 50, 75, 100};
    std::vector<double> d1(heights.size()), d4(heights.size());
    for (std::size_t i = 0; i < heights.size(); ++i) {
        const DjBreakdown d = dj_decomposition(0.6, heights[i], opts);
        d1[i] = d.im_d[0];
        d4[i] = d.im_d[3];
    }

    auto growth = [&](const char* id, const std::vector<double>& vals) {
        CheckReport r;
        r.check_id = id;
        add_param(r, "lambda", 0.6);
        double m = 0.0;
        for (std::size_t i = 0; i < heights.size(); ++i)
            m = std::max(m, std::abs(vals[i]) / std::log(heights[i]));
        const LinearFit fit = envelope_log_fit(heights, vals);
        add_param(r, "envelope_slope", fit.slope);
        add_param(r, "r2", fit.r2);
        r.n_samples = static_cast<int>(heights.size());
        r.fitted_constant = fit.slope;
        r.max_residual = m;
        r.bound_value = 10.0;
        r.pass = m <= 10.0;
        return r;
    };

    return {agree, growth("dj_growth_d1", d1), growth("dj_growth_d4", d4)};
}

} // namespace

} // namespace zetacensus
