#include <doctest.h>

#include "zetacensus/argtrack.hpp"
#include "zetacensus/rng.hpp"
#include "zetacensus/types.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace zetacensus;

namespace {

Contour square(const Cplx& center, double half) {
    Contour c;
    c.vertices = {center + Cplx(-half, -half), center + Cplx(half, -half),
                  center + Cplx(half, half), center + Cplx(-half, half)};
    c.closed = true;
    return c;
}

CplxFn poly_from_roots(std::vector<Cplx> roots) {
    return [roots = std::move(roots)](const Cplx& z) {
        Cplx v = 1.0;
        for (const Cplx& r : roots) v *= (z - r);
        return v;
    };
}

}  // namespace

TEST_CASE("argument tracking of a pure phase ramp") {
    // exp(i pi k z) along [0,1] turns by exactly pi k
    for (double k : {3.0, 7.0, 37.0, 100.3}) {
        auto f = [k](const Cplx& z) { return std::exp(Cplx(0.0, M_PI * k) * z); };
        ArgTrace tr = track_argument(f, Segment(Cplx(0, 0), Cplx(1, 0)));
        CHECK(tr.delta_arg == doctest::Approx(M_PI * k).epsilon(1e-9));
        CHECK(tr.min_modulus == doctest::Approx(1.0).epsilon(1e-12));
        REQUIRE(tr.samples.size() >= 17);
        for (size_t i = 1; i < tr.samples.size(); ++i) {
            CHECK(tr.samples[i].u > tr.samples[i - 1].u);
            CHECK(std::abs(tr.samples[i].unwrapped_arg -
                           tr.samples[i - 1].unwrapped_arg) < M_PI / 2 + 1e-9);
        }
    }
}

TEST_CASE("argument tracking is exactly reproducible") {
    auto f = [](const Cplx& z) { return std::exp(Cplx(0.0, 9.7) * z) * (z + 2.0); };
    Segment seg(Cplx(0, 0), Cplx(1, 1));
    ArgTrace a = track_argument(f, seg);
    ArgTrace b = track_argument(f, seg);
    CHECK(a == b);
}

TEST_CASE("tracking splits segments additively") {
    auto f = poly_from_roots({Cplx(0.4, 0.1), Cplx(0.6, -0.2)});
    Segment whole(Cplx(-1, -1), Cplx(2, 1));
    Cplx mid = whole.at(0.5);
    double d1 = track_argument(f, Segment(whole.start, mid)).delta_arg;
    double d2 = track_argument(f, Segment(mid, whole.end)).delta_arg;
    double d = track_argument(f, whole).delta_arg;
    CHECK(d == doctest::Approx(d1 + d2).epsilon(1e-9));
}

TEST_CASE("a zero sitting on the path is detected") {
    auto f = [](const Cplx& z) { return z; };
    CHECK_THROWS_AS(track_argument(f, Segment(Cplx(-1, 0), Cplx(1, 0))), ZeroOnPath);
}

TEST_CASE("unresolvable phase oscillation hits the depth cap") {
    // phase with structure at every dyadic scale down past the depth cap:
    // no amount of bisection makes an interval quiet, so the first descent
    // reaches the cap with unit modulus everywhere
    auto f = [](const Cplx& z) {
        double phi = 0.0;
        double freq = 2.0 * M_PI;
        for (int j = 0; j <= 45; ++j) {
            phi += 3.0 * std::sin(freq * z.real() + 0.7 * j);
            freq *= 2.0;
        }
        return std::exp(Cplx(0.0, phi));
    };
    CHECK_THROWS_AS(track_argument(f, Segment(Cplx(0, 0), Cplx(1, 0))),
                    MaxDepthExceeded);
}

TEST_CASE("winding number counts enclosed zeros of polynomials") {
    auto f = poly_from_roots({Cplx(0.2, 0.0), Cplx(-0.3, 0.4), Cplx(-0.3, 0.4)});
    CHECK(winding_number(f, square(Cplx(0, 0), 1.0)) == 3);
    // reversed orientation flips the sign
    Contour rev = square(Cplx(0, 0), 1.0);
    std::reverse(rev.vertices.begin(), rev.vertices.end());
    CHECK(winding_number(f, rev) == -3);
    // a contour enclosing nothing
    CHECK(winding_number(f, square(Cplx(5, 5), 1.0)) == 0);
    // a pole counts negatively
    auto g = [](const Cplx& z) { return 1.0 / (z - 0.1); };
    CHECK(winding_number(g, square(Cplx(0, 0), 1.0)) == -1);
}

TEST_CASE("winding numbers add over a subdivision") {
    auto f = poly_from_roots({Cplx(-0.5, 0.1), Cplx(0.5, -0.2), Cplx(0.4, 0.5)});
    Contour whole = square(Cplx(0, 0), 1.0);
    Contour left, right;
    left.vertices = {Cplx(-1, -1), Cplx(0, -1), Cplx(0, 1), Cplx(-1, 1)};
    left.closed = true;
    right.vertices = {Cplx(0, -1), Cplx(1, -1), Cplx(1, 1), Cplx(0, 1)};
    right.closed = true;
    CHECK(winding_number(f, whole) ==
          winding_number(f, left) + winding_number(f, right));
}

TEST_CASE("contour validation") {
    auto f = [](const Cplx& z) { return z + 4.0; };
    Contour open_c;
    open_c.vertices = {Cplx(0, 0), Cplx(1, 0), Cplx(1, 1)};
    open_c.closed = false;
    CHECK_THROWS_AS(winding_number(f, open_c), DomainError);

    Contour degenerate;
    degenerate.vertices = {Cplx(0, 0), Cplx(1, 0)};
    degenerate.closed = true;
    CHECK_THROWS_AS(winding_number(f, degenerate), DomainError);

    Contour bowtie;
    bowtie.vertices = {Cplx(0, 0), Cplx(1, 1), Cplx(1, 0), Cplx(0, 1)};
    bowtie.closed = true;
    CHECK_THROWS_AS(winding_number(f, bowtie), DomainError);
}

TEST_CASE("segment validation") {
    CHECK_THROWS_AS(Segment(Cplx(1, 1), Cplx(1, 1)), DomainError);
    Cplx bad(std::nan(""), 0.0);
    CHECK_THROWS_AS(Segment(bad, Cplx(0, 0)), DomainError);
}

TEST_CASE("sign changes of the real part along a segment") {
    // Re exp(3.2 pi i z) = cos(3.2 pi x): three sign changes on [0,1]
    auto f = [](const Cplx& z) { return std::exp(Cplx(0.0, 3.2 * M_PI) * z); };
    SignChangeCount sc = sign_change_count(f, Segment(Cplx(0, 0), Cplx(1, 0)));
    CHECK(sc.m == 3);
    CHECK(sc.bound == doctest::Approx(4.0 * M_PI));
    CHECK(std::abs(sc.trace.delta_arg) <= sc.bound + 1e-6);

    // no sign change for a function pinned near the positive real axis
    auto g = [](const Cplx& z) { return 3.0 + 0.1 * z; };
    CHECK(sign_change_count(g, Segment(Cplx(0, 0), Cplx(1, 0))).m == 0);
}

TEST_CASE("disk zero bound is sound on a known polynomial") {
    auto f = poly_from_roots(
        {Cplx(0.1, 0.0), Cplx(0.0, -0.2), Cplx(0.3, 0.1), Cplx(-0.15, -0.25)});
    int m = disk_zero_bound(f, Cplx(0, 0), 0.5, 2.0);
    CHECK(m >= 4);
    CHECK(m <= 10);
}

TEST_CASE("disk zero bound over a random polynomial corpus") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        int deg = 1 + int(rng.uniform01() * 5.0);
        std::vector<Cplx> roots;
        int inside = 0;
        for (int j = 0; j < deg; ++j) {
            Cplx r = rng.in_rect(-0.8, 0.8, -0.8, 0.8);
            roots.push_back(r);
            if (std::abs(r) <= 1.0) ++inside;
        }
        auto f = poly_from_roots(roots);
        int m = disk_zero_bound(f, Cplx(0, 0), 1.0, 2.0);
        CHECK(m >= inside);
    }
}

TEST_CASE("disk zero bound input validation") {
    auto f = [](const Cplx& z) { return z - 20.0; };
    CHECK_THROWS_AS(disk_zero_bound(f, Cplx(0, 0), 2.0, 1.0), DomainError);
    CHECK_THROWS_AS(disk_zero_bound(f, Cplx(0, 0), -1.0, 2.0), DomainError);
    CHECK_THROWS_AS(disk_zero_bound(f, Cplx(0, 0), 1.0, 2.0, 3), DomainError);
    auto z0zero = [](const Cplx& z) { return z; };
    CHECK_THROWS_AS(disk_zero_bound(z0zero, Cplx(0, 0), 1.0, 2.0), ZeroAtCenter);
}
