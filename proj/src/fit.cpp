#include "zetacensus/fit.hpp"

#include <cmath>
#include <cstddef>

#include "zetacensus/types.hpp"

namespace zetacensus {

LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw DomainError("fit_linear: need two or more paired samples");
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw DomainError("fit_linear: degenerate abscissa (all x equal)");

    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    if (syy == 0.0) {
        f.r2 = 1.0; // constant data, exactly reproduced
    } else {
        double ssres = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = y[i] - (f.intercept + f.slope * x[i]);
            ssres += r * r;
        }
        f.r2 = 1.0 - ssres / syy;
    }
    return f;
}

LinearFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw DomainError("fit_loglog: need two or more paired samples");
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw DomainError("fit_loglog: data must be strictly positive");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
    }
    return fit_linear(lx, ly);
}

double fit_proportional(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.empty())
        throw DomainError("fit_proportional: need paired samples");
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += x[i] * y[i];
        sxx += x[i] * x[i];
    }
    if (sxx == 0.0)
        throw DomainError("fit_proportional: degenerate abscissa");
    return sxy / sxx;
}

std::vector<double> running_abs_max(const std::vector<double>& v) {
    std::vector<double> out(v.size());
    double m = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::fabs(v[i]);
        if (a > m)
            m = a;
        out[i] = m;
    }
    return out;
}

} // namespace zetacensus
