#pragma once

#include <vector>

namespace zetacensus {

struct LinearFit {
    double intercept = 0.0;
    double slope = 0.0;
    double r2 = 0.0;
};

// Ordinary least squares y ~ intercept + slope * x, with centered R^2.
LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y);

// Power law y ~ c * x^b via log-log least squares; requires positive data.
// Returned slope is b, intercept is log c.
LinearFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

// Through-origin slope for y ~ c * x.
double fit_proportional(const std::vector<double>& x, const std::vector<double>& y);

// Running maximum of |v| in input order (envelope for sup-type growth claims).
std::vector<double> running_abs_max(const std::vector<double>& v);

} // namespace zetacensus
