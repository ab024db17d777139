#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "zetacensus/types.hpp"

namespace zetacensus {

// One named verification with its sampled worst case against a stated cap.
// bound_value NaN means the claim is a growth law with no literal cap; the
// fitted constant and the fit diagnostics stashed in params carry the result
// instead. pass is (max_residual <= bound_value) when the bound exists,
// otherwise the fit-quality rule documented at the producing function.
struct CheckReport {
    std::string check_id;
    std::vector<std::pair<std::string, double>> params;
    int n_samples = 0;
    double max_residual = 0.0;
    double bound_value = std::numeric_limits<double>::quiet_NaN();
    double fitted_constant = std::numeric_limits<double>::quiet_NaN();
    bool pass = false;
};

// Im log xi increments along the five edges of the nested rectangle route,
// plus the zero counts reconstructed from them and from the census.
struct DjBreakdown {
    double lambda = 0.0;
    double T = 0.0;
    double epsilon = 0.0;
    double X = 0.0;
    double Y = 0.0;
    double Y1 = 0.0;
    std::array<double, 5> im_d{};
    double reconstructed_count = 0.0;
    int census_count = 0;
};

// xi(1-s) vs xi(s) and xi(conj s) vs conj xi(s) at n random points in the
// strip sigma in (1/2, 5/2], |t| <= 30, plus n/4 critical-line points where
// Im xi must vanish; relative residuals, bound 1e-9.
std::vector<CheckReport> check_functional_equation(int n, std::uint64_t seed,
                                                   const EvalOptions& opts = {});

// max |zeta(sigma+it)| over sigma in [delta, 1] against c t^{(1-delta)/2}:
// fits c through the origin, requires c <= 10 and no point above 1.5x the
// fitted law; separately |zeta(2+it)| <= zeta(2).
std::vector<CheckReport> check_zeta_bound(double delta, const std::vector<double>& t_grid,
                                          const EvalOptions& opts = {});

// Pseudo gamma: center value 2, critical-line range [1,2], the two reflection
// symmetries, the Stirling residual factor cap 3, and the comparison against
// Gamma(s/2) on first-quadrant annulus arcs |s-1/2| ~ 9Y/5 including the
// near-center band where the literal cap 21 applies. Y values must lie in
// [8, 80]; larger Y overflows the Gamma comparison.
std::vector<CheckReport> check_nabla_suite(const std::vector<double>& Y_grid,
                                           const EvalOptions& opts = {});

// max modulus of xi/nabla, the nabla shift ratio, and the symmetrized pair
// average on the circle |s - X| = 9Y/5 for each Y, fitted to c Y^b. X = 1
// makes the shift ratio identically 1 and is rejected.
std::vector<CheckReport> check_ratio_growth(double X, const std::vector<double>& Y_grid,
                                            const EvalOptions& opts = {});

// zeta'/zeta(s) minus the sum of 1/(s - rho) over census zeros within 1 of t,
// for sigma in [-1, 2]: worst residual normalized by log t, the near-window
// zero count against 3 log t, and a sigma = -1 cross-path agreement.
std::vector<CheckReport> check_local_expansion(const std::vector<double>& t_grid,
                                               const EvalOptions& opts = {});

// xi'/xi(s) against the constant -1 - gamma0/2 + log 2 + (log pi)/2 plus the
// first K zero pairs rho = 1/2 +- i gamma, each contributing 1/(s-rho) + 1/rho.
// Residuals must shrink monotonically beyond K=20 and the K=200 residual must
// sit within 5x of the power-law trend fitted on K in {20,50,100}.
std::vector<CheckReport> check_xi_logderiv_sum(const std::vector<Cplx>& s_grid, int K,
                                               const EvalOptions& opts = {});

// Im log xi along horizontal segments x+yi -> 1/2+yi for y in the grid
// (ordinate-adjacent heights nudged): envelope of |value| fitted against
// log y, and the log Gamma half-argument part capped by 1 for y >= 10.
std::vector<CheckReport> proposition1_experiment(double x, const std::vector<double>& y_grid,
                                                 const EvalOptions& opts = {});

// Vertical-segment argument accounting at sigma = 2 and sigma = X against the
// pseudo gamma comparison: two-path identity, envelope growth in log Y, real
// sign changes on the X segment against the disk-count cap, and positivity of
// the symmetrized average at the center. Requires 8 <= Y <= 80, X in (1/2, 1).
std::vector<CheckReport> proposition2_experiment(double X, const std::vector<double>& Y_grid,
                                                 const EvalOptions& opts = {});

// Argument increments of xi along the five-edge nested rectangle route at
// heights Y = T + eps and Y1 = T + 4 eps, eps from epsilon_contour.
// reconstructed_count folds the increments with the direct winding of the
// band 0 <= t < 2; census_count is the same quantity from rectangle winding
// counts. Throws NumericalError if they disagree beyond 0.01 after rounding.
DjBreakdown dj_decomposition(double lambda, double T, const EvalOptions& opts = {});

// Closed-form Im log Gamma(s/2) against the computed value, residual scaled
// by |s|/2, on a grid with t >= 5, sigma in [1/8, 3].
std::vector<CheckReport> check_im_loggamma(const std::vector<Cplx>& grid,
                                           const EvalOptions& opts = {});

// Registry: every suite under its stable name, run with default parameters.
std::vector<std::string> suite_names();
std::vector<CheckReport> run_suite(const std::string& name, const EvalOptions& opts = {});

// JSON array, one object per report, keys in declaration order, numbers with
// 17 significant digits, NaN rendered as null.
std::string reports_to_json(const std::vector<CheckReport>& reports);

} // namespace zetacensus
