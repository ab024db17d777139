#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "zetacensus/census.hpp"
#include "zetacensus/parallel.hpp"
#include "zetacensus/xi.hpp"

using namespace zetacensus;

namespace {

// First ordinates on the critical line, for cross-checking located zeros.
constexpr double kGamma1 = 14.134725141734693;
constexpr double kGamma2 = 21.022039638771554;
constexpr double kGamma3 = 25.010857580145688;

} // namespace

TEST_CASE("the first ordinate is located to bracket precision") {
    const auto zeros = locate_critical_zeros(15.0);
    REQUIRE(zeros.size() == 1);
    const ZeroRecord& z = zeros[0];
    CHECK(z.index == 1);
    CHECK(std::abs(z.gamma - kGamma1) < 5e-9);
    CHECK(z.bracket_hi - z.bracket_lo <= 1e-9);
    CHECK(z.bracket_lo < z.gamma);
    CHECK(z.gamma < z.bracket_hi);
    CHECK(xi_critical_scaled(z.bracket_lo) * xi_critical_scaled(z.bracket_hi) < 0.0);
    CHECK(z.residual >= 0.0);
    CHECK(z.residual < 1e-12);
}

TEST_CASE("no zeros are reported below the first ordinate") {
    CHECK(locate_critical_zeros(5.0).empty());
    CHECK(locate_critical_zeros(14.0).empty());
    CHECK(locate_critical_zeros(14.2).size() == 1);
}

TEST_CASE("scan preconditions") {
    CHECK_THROWS_AS(locate_critical_zeros(1.5), DomainError);
    CHECK_THROWS_AS(locate_critical_zeros(2.0), DomainError);
    CHECK_THROWS_AS(locate_critical_zeros(600.0), DomainError);
    EvalOptions bad;
    bad.target_abs_err = -1.0;
    CHECK_THROWS_AS(locate_critical_zeros(15.0, bad), DomainError);
}

TEST_CASE("the first twenty-nine zeros below height 100") {
    const auto zeros = locate_critical_zeros(100.0);
    REQUIRE(zeros.size() == 29);
    CHECK(std::abs(zeros[0].gamma - kGamma1) < 5e-9);
    CHECK(std::abs(zeros[1].gamma - kGamma2) < 5e-9);
    CHECK(std::abs(zeros[2].gamma - kGamma3) < 5e-9);
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        const ZeroRecord& z = zeros[i];
        CHECK(z.index == static_cast<int>(i) + 1);
        CHECK(z.bracket_hi - z.bracket_lo <= 1e-9);
        CHECK(xi_critical_scaled(z.bracket_lo) * xi_critical_scaled(z.bracket_hi) < 0.0);
        CHECK(z.residual >= 0.0);
        CHECK(z.residual < 1e-12);
        if (i > 0)
            CHECK(z.gamma > zeros[i - 1].gamma);
    }
}

TEST_CASE("winding counts at reference heights") {
    CHECK(count_zeros_NT(15.0) == 1);
    CHECK(count_zeros_NT(50.0) == 10);
    CHECK(count_zeros_NT(100.0) == 29);
}

TEST_CASE("a height too close to an ordinate is rejected with a usable suggestion") {
    double suggested = 0.0;
    try {
        count_zeros_NT(14.13);
        FAIL("expected ContourThroughZero");
    } catch (const ContourThroughZero& e) {
        suggested = e.suggested_height;
    }
    CHECK(suggested > 14.13);
    for (const auto& z : locate_critical_zeros(suggested + 1.0))
        CHECK(std::abs(z.gamma - suggested) >= 0.05 - 1e-12);
}

TEST_CASE("main term of the zero count") {
    const double te = 2.0 * std::numbers::pi * std::numbers::e;
    CHECK(rvm_main_term(te) == doctest::Approx(0.875).epsilon(1e-12));
    CHECK(rvm_main_term(100.0) == doctest::Approx(29.002343587325348).epsilon(1e-12));
    CHECK(rvm_main_term(50.0) == doctest::Approx(9.422781789846384).epsilon(1e-12));
    CHECK_THROWS_AS(rvm_main_term(6.0), DomainError);
    CHECK_THROWS_AS(rvm_main_term(2.0 * std::numbers::pi), DomainError);
}

TEST_CASE("census bundle agrees with itself") {
    const CensusResult r = build_census(100.0);
    CHECK(r.height == 100.0);
    CHECK(r.zeros.size() == 29);
    CHECK(r.count_by_winding == 29);
    CHECK(r.rvm_main == doctest::Approx(29.002343587325348).epsilon(1e-12));
    CHECK(std::abs(r.count_by_winding - r.rvm_main) <= 2.0);

    const CensusResult low = build_census(6.5);
    CHECK(low.zeros.empty());
    CHECK(low.count_by_winding == 0);

    CHECK_THROWS_AS(build_census(5.0), DomainError);
}

TEST_CASE("counts track the main term at increasing heights") {
    const double heights[] = {20.0, 50.0, 100.0, 200.0, 300.0, 500.0};
    const int expected[] = {1, 10, 29, 79, 138, 269};
    int prev = 0;
    for (int i = 0; i < 6; ++i) {
        const int n = count_zeros_NT(heights[i]);
        CHECK(n == expected[i]);
        CHECK(n == static_cast<int>(locate_critical_zeros(heights[i]).size()));
        CHECK(std::abs(n - rvm_main_term(heights[i])) <= 2.0);
        CHECK(n >= prev);
        prev = n;
    }
}

TEST_CASE("minimal gap between zeros") {
    // only one ordinate below 20: the closest pair is the conjugate pair
    CHECK(min_zero_gap(10.0) == doctest::Approx(2.0 * kGamma1).epsilon(1e-9));
    CHECK(min_zero_gap(5.0) == std::numeric_limits<double>::infinity());

    // brute force over every pairwise distance, both half planes
    const auto zeros = locate_critical_zeros(50.0);
    double brute = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < zeros.size(); ++i)
        for (std::size_t j = 0; j < zeros.size(); ++j) {
            if (i < j)
                brute = std::min(brute, zeros[j].gamma - zeros[i].gamma);
            brute = std::min(brute, zeros[i].gamma + zeros[j].gamma);
        }
    CHECK(min_zero_gap(25.0) == doctest::Approx(brute).epsilon(1e-12));

    CHECK(min_zero_gap(50.0) == doctest::Approx(1.21929).epsilon(1e-4));
    CHECK_THROWS_AS(min_zero_gap(501.0), CensusIncomplete);
    CHECK_THROWS_AS(min_zero_gap(0.0), DomainError);
}

TEST_CASE("separation parameter choice") {
    // at (0.75, 15) the strip half-width term wins: 0.9 * 0.125
    CHECK(epsilon_choice(0.75, 15.0) == doctest::Approx(0.1125).epsilon(1e-12));
    // at (0.51, 100) it wins again: 0.9 * 0.005
    CHECK(epsilon_choice(0.51, 100.0) == doctest::Approx(0.0045).epsilon(1e-9));
    CHECK_THROWS_AS(epsilon_choice(0.5, 15.0), DomainError);
    CHECK_THROWS_AS(epsilon_choice(1.0, 15.0), DomainError);
}

TEST_CASE("contour separation backs away from an ordinate just above the height") {
    // no ordinate near 50: the base choice stands
    CHECK(epsilon_contour(0.6, 50.0) == doctest::Approx(0.045).epsilon(1e-12));
    CHECK(epsilon_contour(0.6, 50.0) == doctest::Approx(epsilon_choice(0.6, 50.0)));

    // the ordinate at 48.005 sits inside the band above T = 48, forcing a shrink
    const double e0 = epsilon_choice(0.7, 48.0);
    const double e1 = epsilon_contour(0.7, 48.0);
    CHECK(e1 < e0);
    const auto zeros = locate_critical_zeros(49.0);
    double gstar = 0.0;
    for (const auto& z : zeros)
        if (z.gamma > 48.0) {
            gstar = z.gamma;
            break;
        }
    REQUIRE(gstar > 48.0);
    CHECK(e1 == doctest::Approx(0.9 * (gstar - 48.0) / 5.0).epsilon(1e-12));
    CHECK(48.0 + 5.0 * e1 < gstar);
}

TEST_CASE("height nudging") {
    CHECK(nudged_height(30.0) == 30.0);
    const double nh = nudged_height(14.12);
    CHECK(nh == doctest::Approx(14.22).epsilon(1e-9));
    CHECK(std::abs(nh - kGamma1) >= 0.05);
    CHECK_THROWS_AS(nudged_height(0.0), DomainError);
    CHECK_THROWS_AS(nudged_height(10.0, EvalOptions{}, 0.0), DomainError);
    CHECK_THROWS_AS(nudged_height(10.0, EvalOptions{}, 1.5), DomainError);
}

TEST_CASE("strip count at moderate height") {
    const DensityCount d = density_breakdown(0.6, 30.0);
    CHECK(d.epsilon == doctest::Approx(0.045).epsilon(1e-12));
    CHECK(d.X == doctest::Approx(0.555).epsilon(1e-12));
    CHECK(d.Y == doctest::Approx(30.045).epsilon(1e-12));
    CHECK(d.total == 3);
    CHECK(d.off_line == 0);
    CHECK(d.off_line_windows.empty());
    CHECK(count_zeros_density(0.6, 30.0) == 3);
}

TEST_CASE("strip count preconditions") {
    CHECK_THROWS_AS(density_breakdown(0.5, 30.0), DomainError);
    CHECK_THROWS_AS(density_breakdown(1.0, 30.0), DomainError);
    CHECK_THROWS_AS(density_breakdown(0.6, 2.0), DomainError);
    CHECK_THROWS_AS(density_breakdown(0.6, 600.0), DomainError);
    // a strip this thin cannot be separated from the critical line
    CHECK_THROWS_AS(density_breakdown(0.5 + 1e-9, 30.0), DomainError);
}

TEST_CASE("census csv round trip") {
    const auto zeros = locate_critical_zeros(30.0);
    REQUIRE(zeros.size() == 3);
    std::ostringstream out;
    write_census_csv(out, zeros);
    const std::string text = out.str();
    CHECK(text.find('\r') == std::string::npos);

    std::istringstream in(text);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "index,gamma,bracket_lo,bracket_hi,residual");
    std::size_t row = 0;
    while (std::getline(in, line)) {
        REQUIRE(row < zeros.size());
        int idx = 0;
        double g = 0, lo = 0, hi = 0, res = 0;
        REQUIRE(std::sscanf(line.c_str(), "%d,%lf,%lf,%lf,%lf", &idx, &g, &lo, &hi, &res) == 5);
        CHECK(idx == zeros[row].index);
        CHECK(g == doctest::Approx(zeros[row].gamma).epsilon(1e-14));
        CHECK(lo == doctest::Approx(zeros[row].bracket_lo).epsilon(1e-14));
        CHECK(hi == doctest::Approx(zeros[row].bracket_hi).epsilon(1e-14));
        CHECK(res == doctest::Approx(zeros[row].residual).epsilon(1e-13));
        ++row;
    }
    CHECK(row == zeros.size());
    // full precision appears in the text: 10 digits pinned by the bracket
    // guarantee, and a 15 significant digit field width
    CHECK(text.find("1,14.13472514") != std::string::npos);
    const std::string first_gamma = text.substr(text.find("1,14.") + 2, 16);
    CHECK(first_gamma.size() == 16);
    CHECK(first_gamma.find_first_not_of("0123456789.") == std::string::npos);
}

TEST_CASE("rescans are reproducible") {
    const auto a = locate_critical_zeros(50.0);
    clear_census_cache();
    const auto b = locate_critical_zeros(50.0);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i] == b[i]);
}

TEST_CASE("extending a scan matches a fresh scan") {
    clear_census_cache();
    const auto part = locate_critical_zeros(30.0);
    const auto extended = locate_critical_zeros(50.0);
    clear_census_cache();
    const auto fresh = locate_critical_zeros(50.0);
    REQUIRE(extended.size() == fresh.size());
    for (std::size_t i = 0; i < extended.size(); ++i)
        CHECK(extended[i] == fresh[i]);
    REQUIRE(part.size() <= extended.size());
    for (std::size_t i = 0; i < part.size(); ++i)
        CHECK(part[i] == extended[i]);
}

TEST_CASE("results do not depend on the worker count") {
    set_thread_count(1);
    clear_census_cache();
    const auto serial = locate_critical_zeros(40.0);
    set_thread_count(3);
    clear_census_cache();
    const auto threaded = locate_critical_zeros(40.0);
    set_thread_count(0);
    REQUIRE(serial.size() == threaded.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
        CHECK(serial[i] == threaded[i]);
}

TEST_CASE("changing evaluation options rescans rather than reusing samples") {
    const auto tight = locate_critical_zeros(30.0);
    EvalOptions loose;
    loose.target_abs_err = 1e-10;
    const auto relaxed = locate_critical_zeros(30.0, loose);
    REQUIRE(tight.size() == relaxed.size());
    for (std::size_t i = 0; i < tight.size(); ++i)
        CHECK(std::abs(tight[i].gamma - relaxed[i].gamma) < 1e-8);
}
