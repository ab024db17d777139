#include <doctest.h>

#include "zetacensus/fit.hpp"
#include "zetacensus/rng.hpp"
#include "zetacensus/types.hpp"

#include <cmath>
#include <vector>

using namespace zetacensus;

TEST_CASE("linear fit recovers exact line") {
    std::vector<double> xs, ys;
    for (int i = 0; i < 20; ++i) {
        double x = 0.3 * i - 2.0;
        xs.push_back(x);
        ys.push_back(1.75 * x - 0.4);
    }
    auto f = fit_linear(xs, ys);
    CHECK(f.slope == doctest::Approx(1.75).epsilon(1e-12));
    CHECK(f.intercept == doctest::Approx(-0.4).epsilon(1e-12));
    CHECK(f.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("linear fit on noisy data has r2 below 1") {
    Rng rng(7);
    std::vector<double> xs, ys;
    for (int i = 0; i < 200; ++i) {
        double x = rng.uniform(0.0, 10.0);
        xs.push_back(x);
        ys.push_back(2.0 * x + 1.0 + rng.uniform(-0.5, 0.5));
    }
    auto f = fit_linear(xs, ys);
    CHECK(f.slope == doctest::Approx(2.0).epsilon(0.02));
    CHECK(f.r2 > 0.99);
    CHECK(f.r2 < 1.0);
}

TEST_CASE("constant data fits with r2 = 1 and zero slope") {
    std::vector<double> xs = {1.0, 2.0, 3.0, 4.0};
    std::vector<double> ys = {5.0, 5.0, 5.0, 5.0};
    auto f = fit_linear(xs, ys);
    CHECK(f.slope == doctest::Approx(0.0));
    CHECK(f.intercept == doctest::Approx(5.0));
    CHECK(f.r2 == doctest::Approx(1.0));
}

TEST_CASE("linear fit input validation") {
    std::vector<double> one = {1.0};
    CHECK_THROWS_AS(fit_linear(one, one), DomainError);
    std::vector<double> xs = {2.0, 2.0, 2.0};
    std::vector<double> ys = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(fit_linear(xs, ys), DomainError);
    std::vector<double> a = {1.0, 2.0};
    std::vector<double> b = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(fit_linear(a, b), DomainError);
}

TEST_CASE("loglog fit recovers power law") {
    std::vector<double> xs, ys;
    for (int i = 1; i <= 30; ++i) {
        double x = 0.5 * i;
        xs.push_back(x);
        ys.push_back(3.0 * std::pow(x, 2.5));
    }
    auto f = fit_loglog(xs, ys);
    CHECK(f.slope == doctest::Approx(2.5).epsilon(1e-10));
    CHECK(std::exp(f.intercept) == doctest::Approx(3.0).epsilon(1e-10));

    std::vector<double> bad = {1.0, -2.0, 3.0};
    std::vector<double> xs3 = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(fit_loglog(xs3, bad), DomainError);
}

TEST_CASE("proportional fit goes through the origin") {
    std::vector<double> xs = {1.0, 2.0, 3.0, 4.0};
    std::vector<double> ys = {2.1, 3.9, 6.05, 8.0};
    double slope = fit_proportional(xs, ys);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("running max envelope is monotone and dominates input") {
    std::vector<double> v = {1.0, -3.0, 2.0, 0.5, 4.0};
    auto env = running_abs_max(v);
    REQUIRE(env.size() == v.size());
    std::vector<double> want = {1.0, 3.0, 3.0, 3.0, 4.0};
    for (size_t i = 0; i < v.size(); ++i) {
        CHECK(env[i] == doctest::Approx(want[i]));
        CHECK(env[i] >= std::abs(v[i]));
        if (i) CHECK(env[i] >= env[i - 1]);
    }
}

TEST_CASE("rng is deterministic for a fixed seed") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) {
        double x = a.uniform01();
        CHECK(x == b.uniform01());
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
    auto s1 = a.in_rect(0.0, 1.0, -5.0, 5.0);
    auto s2 = b.in_rect(0.0, 1.0, -5.0, 5.0);
    CHECK(s1 == s2);
    CHECK(s1.real() >= 0.0);
    CHECK(s1.real() <= 1.0);
    CHECK(std::abs(s1.imag()) <= 5.0);
}
