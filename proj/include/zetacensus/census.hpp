#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "zetacensus/types.hpp"

namespace zetacensus {

struct ZeroRecord {
    int index = 0;           // 1-based by increasing ordinate
    double gamma = 0.0;      // ordinate of the zero on the critical line
    double bracket_lo = 0.0; // sign-change bracket, width <= 1e-9
    double bracket_hi = 0.0;
    double residual = 0.0;   // |xi(1/2 + i gamma)|

    bool operator==(const ZeroRecord&) const = default;
};

struct CensusResult {
    std::vector<ZeroRecord> zeros;
    double height = 0.0;
    int count_by_winding = 0;
    double rvm_main = 0.0;
};

// Scan of real xi(1/2+it) e^{pi t/4} over (0, T]: base step 0.05, cells where
// the modulus dips against their neighborhood are resampled at step 0.1/32,
// every sign change bisected to a bracket of width <= 1e-9. Results for a
// given T and options are deterministic; samples live in a process cache so
// extending the height reuses earlier work.
std::vector<ZeroRecord> locate_critical_zeros(double T, const EvalOptions& opts = {},
                                              double height_cap = 500.0);

// Census plus the independent winding count and the smooth main term
// (T/2pi) log(T/2pi) - T/2pi + 7/8. A scan/winding mismatch means a missed
// or off-line zero and is a hard error.
CensusResult build_census(double T, const EvalOptions& opts = {},
                          double height_cap = 500.0);

// Winding of xi around the rectangle [-1,2] x [-T,T] divided by two.
// T must clear every zero ordinate by 0.05; ContourThroughZero carries a
// nudged suggestion otherwise.
int count_zeros_NT(double T, const EvalOptions& opts = {}, double height_cap = 500.0);

double rvm_main_term(double T);

// Minimum pairwise distance among the critical-line zeros with |gamma| <= 2T
// together with their conjugates and 1-rho reflections; +infinity when the
// census below 2T is empty. Needs the census up to 2T, which is capped at
// 1000 (CensusIncomplete beyond).
double min_zero_gap(double T, const EvalOptions& opts = {});

// 0.9 x min{gap/5, (lambda-1/2)/2, T/9}.
double epsilon_choice(double lambda, double T, const EvalOptions& opts = {});

// epsilon_choice shrunk further when a zero ordinate falls in (T, T+5 eps):
// the contours built at heights T+eps .. T+4 eps must stay clear of it.
double epsilon_contour(double lambda, double T, const EvalOptions& opts = {});

// Smallest height y + 0.05 k (k >= 0) clearing every zero ordinate by the
// given margin.
double nudged_height(double y, const EvalOptions& opts = {}, double clearance = 0.05);

struct DensityCount {
    int total = 0;      // |winding|/2 over the rectangle [1-X, X] x [-Y, Y]
    int off_line = 0;   // total minus the critical-line census count below Y
    double X = 0.0;     // lambda - epsilon
    double Y = 0.0;     // T + epsilon
    double epsilon = 0.0;
    // when off_line > 0: t-windows of width <= 0.1 isolating the culprits
    std::vector<std::pair<double, double>> off_line_windows;
};

// Zero count for the density rectangle at X = lambda - eps, Y = T + eps
// (1/2 < lambda < 1). count_zeros_density returns the total; the breakdown
// separates the off-line excess and localizes it if it is ever nonzero.
DensityCount density_breakdown(double lambda, double T, const EvalOptions& opts = {},
                               double height_cap = 500.0);
int count_zeros_density(double lambda, double T, const EvalOptions& opts = {},
                        double height_cap = 500.0);

// CSV export: header index,gamma,bracket_lo,bracket_hi,residual then one
// record per line, 15 significant digits, LF endings.
void write_census_csv(std::ostream& out, const std::vector<ZeroRecord>& zeros);

// Drops the process-wide sample cache (tests use this to exercise cold runs).
void clear_census_cache();

} // namespace zetacensus
