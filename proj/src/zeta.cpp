#include "zetacensus/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace zetacensus {

namespace {

constexpr double kLog2 = 0.6931471805599453094;

struct KahanC {
    Cplx sum{0.0, 0.0};
    Cplx comp{0.0, 0.0};
    void add(const Cplx& v) {
        const Cplx y = v - comp;
        const Cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

void check_pole(const Cplx& s, const EvalOptions& opts) {
    if (std::abs(s - Cplx(1.0, 0.0)) <= 10.0 * opts.target_abs_err)
        throw PoleAtOne();
}

} // namespace

namespace detail {

// zeta(s) = 1/(1 - 2^{1-s}) * sum_n 2^{-(n+1)} sum_k (-1)^k C(n,k) (k+1)^{-s}.
// Row weights D(n,k) = C(n,k) 2^{-(n+1)} obey D(n,k) = (D(n-1,k-1)+D(n-1,k))/2
// and stay in [0,1], so no scale juggling is needed.
ZetaPair zeta_alternating(const Cplx& s, const EvalOptions& opts) {
    const Cplx w = std::exp((1.0 - s) * kLog2); // 2^{1-s}
    const Cplx denom = 1.0 - w;
    const Cplx prefactor = 1.0 / denom;
    const Cplx dprefactor = -kLog2 * w / (denom * denom);
    const double pref_scale = std::max(1.0, std::abs(prefactor));

    std::vector<Cplx> p; // (k+1)^{-s}
    std::vector<Cplx> q; // -log(k+1) (k+1)^{-s}
    std::vector<double> row{0.5};

    // The summed inner terms decay roughly like (2e)^{-n} once n is past |s|,
    // so the magnitude of the latest term, times a conservative geometric tail
    // factor, bounds everything still to come. The triangle-inequality bound is
    // useless here: it stays near 2^{-1} for sigma <= 0.
    constexpr double kTailFactor = 3.0;
    constexpr int kMinTerms = 16;

    KahanC A, dA;
    int calm = 0;
    for (int n = 0;; ++n) {
        if (n > opts.max_terms)
            throw NonConvergence("zeta: alternating series exhausted max_terms");
        while (static_cast<int>(p.size()) <= n) {
            const double k1 = static_cast<double>(p.size()) + 1.0;
            const double lk = std::log(k1);
            const Cplx pk = std::exp(-s * lk);
            p.push_back(pk);
            q.push_back(-lk * pk);
        }
        Cplx inner{0.0, 0.0}, dinner{0.0, 0.0};
        for (int k = 0; k <= n; ++k) {
            const double wgt = (k & 1) ? -row[static_cast<std::size_t>(k)]
                                       : row[static_cast<std::size_t>(k)];
            inner += wgt * p[static_cast<std::size_t>(k)];
            dinner += wgt * q[static_cast<std::size_t>(k)];
        }
        A.add(inner);
        dA.add(dinner);

        if (n >= kMinTerms &&
            kTailFactor * std::abs(inner) * pref_scale < 0.5 * opts.target_abs_err) {
            if (++calm >= 3)
                break;
        } else {
            calm = 0;
        }

        row.push_back(0.0);
        for (std::size_t k = row.size() - 1; k > 0; --k)
            row[k] = 0.5 * (row[k] + row[k - 1]);
        row[0] *= 0.5;
    }

    ZetaPair out;
    out.value = prefactor * A.sum;
    out.deriv = dprefactor * A.sum + prefactor * dA.sum;
    return out;
}

ZetaPair zeta_euler_maclaurin(const Cplx& s, const EvalOptions& opts) {
    static constexpr double kBernFac[4] = {
        1.0 / 12.0,        // B2/2!
        -1.0 / 720.0,      // B4/4!
        1.0 / 30240.0,     // B6/6!
        -1.0 / 1209600.0,  // B8/8!
    };
    const double sigma = s.real();
    const double at = std::fabs(s.imag());

    long N = std::max<long>(20, static_cast<long>(std::ceil(2.0 * at)));
    // First omitted correction ~ B10/10! * (s)_9 * N^{-sigma-9}.
    const auto omitted = [&](long n) {
        double prod = 1.0;
        for (int j = 0; j < 9; ++j)
            prod *= std::abs(s + static_cast<double>(j));
        return (5.0 / 66.0) / 3628800.0 * prod * std::pow(static_cast<double>(n), -sigma - 9.0);
    };
    while (omitted(N) > 0.5 * opts.target_abs_err) {
        N = static_cast<long>(std::ceil(1.35 * static_cast<double>(N)));
        if (N > static_cast<long>(opts.max_terms) * 64L)
            throw NonConvergence("zeta: Euler-Maclaurin main sum would exceed limits");
    }

    KahanC main, dmain;
    for (long n = 1; n < N; ++n) {
        const double ln = std::log(static_cast<double>(n));
        const Cplx term = std::exp(-s * ln);
        main.add(term);
        dmain.add(-ln * term);
    }

    const double lnN = std::log(static_cast<double>(N));
    const Cplx NmS = std::exp(-s * lnN); // N^{-s}
    const Cplx sm1 = s - 1.0;
    const Cplx tail = NmS * static_cast<double>(N) / sm1; // N^{1-s}/(s-1)
    const Cplx dtail = -lnN * tail - NmS * static_cast<double>(N) / (sm1 * sm1);
    const Cplx half = 0.5 * NmS;
    const Cplx dhalf = -0.5 * lnN * NmS;

    Cplx corr{0.0, 0.0}, dcorr{0.0, 0.0};
    Cplx poch{1.0, 0.0};     // (s)_m
    Cplx poch_dl{0.0, 0.0};  // (s)_m * sum_j 1/(s+j)
    int m = 0;
    Cplx Npow = NmS / static_cast<double>(N); // N^{-s-m} with m = 1
    for (int k = 1; k <= 4; ++k) {
        while (m < 2 * k - 1) {
            const Cplx factor = s + static_cast<double>(m);
            poch_dl = poch_dl * factor + poch;
            poch *= factor;
            ++m;
            if (m > 1)
                Npow /= static_cast<double>(N);
        }
        corr += kBernFac[k - 1] * poch * Npow;
        dcorr += kBernFac[k - 1] * (poch_dl - lnN * poch) * Npow;
    }

    ZetaPair out;
    out.value = main.sum + tail + half + corr;
    out.deriv = dmain.sum + dtail + dhalf + dcorr;
    return out;
}

ZetaPair zeta_with_deriv(const Cplx& s, const EvalOptions& opts) {
    ensure_finite(s, "zeta");
    opts.validate();
    check_pole(s, opts);
    if (std::fabs(s.imag()) <= opts.em_cutoff_t)
        return zeta_alternating(s, opts);
    return zeta_euler_maclaurin(s, opts);
}

} // namespace detail

Cplx zeta(const Cplx& s, const EvalOptions& opts) {
    return detail::zeta_with_deriv(s, opts).value;
}

Cplx zeta_logderiv(const Cplx& s, const EvalOptions& opts) {
    const auto zp = detail::zeta_with_deriv(s, opts);
    if (std::abs(zp.value) <= 10.0 * opts.target_abs_err)
        throw NearZeroDivision("zeta_logderiv: zeta(s) vanishes within guard");
    return zp.deriv / zp.value;
}

double zeta_integral_real(double sigma, const EvalOptions& opts) {
    ensure_finite(sigma, "zeta_integral_real");
    opts.validate();
    if (!(sigma > 0.0))
        throw DomainError("zeta_integral_real: sigma must be positive");
    if (std::fabs(sigma - 1.0) <= 10.0 * opts.target_abs_err)
        throw PoleAtOne();

    const double s = sigma;
    // Tail past N: (1/(2s)) N^{-s} - (1/12) N^{-s-1} + R, |R| <= 0.00802 (s+1) N^{-s-2}.
    long N = 16;
    while (s * 0.00802 * (s + 1.0) * std::pow(static_cast<double>(N), -s - 2.0) >
           opts.target_abs_err) {
        N *= 2;
        if (N > 1L << 40)
            throw NonConvergence("zeta_integral_real: tail bound will not reach target");
    }

    // integral_n^{n+1} (v-n) v^{-s-1} dv = (b^{1-s}-a^{1-s})/(1-s) - n (a^{-s}-b^{-s})/s
    double acc = 0.0, comp = 0.0;
    const auto kadd = [&](double v) {
        const double y = v - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    };
    for (long n = 1; n < N; ++n) {
        const double a = static_cast<double>(n);
        const double b = a + 1.0;
        const double piece = (std::pow(b, 1.0 - s) - std::pow(a, 1.0 - s)) / (1.0 - s) -
                             a * (std::pow(a, -s) - std::pow(b, -s)) / s;
        kadd(piece);
    }
    const double NmS = std::pow(static_cast<double>(N), -s);
    kadd(NmS / (2.0 * s));
    kadd(-NmS / (12.0 * static_cast<double>(N)));

    return s / (s - 1.0) - s * acc;
}

} // namespace zetacensus
