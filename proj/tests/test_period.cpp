#include "doctest.h"

#include <numbers>

#include "modulilog/period.hpp"
#include "modulilog/quadrature.hpp"

#include "oracles.hpp"

using namespace modulilog;

namespace {

using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;
const Complex kTwoPiI(0.0, 2.0 * kPi);

} // namespace

TEST_CASE("period matrix at z = 1/2 matches the closed forms") {
    const auto m = period_matrix(Complex(0.5), 1e-9);
    REQUIRE(m.size == 3);
    CHECK(std::abs(m.at(1, 1) - Complex(1.0)) == 0.0);
    CHECK(std::abs(m.at(2, 1) - Complex(-std::log(2.0))) <= 1e-12);
    CHECK(std::abs(m.at(2, 2) - kTwoPiI) == 0.0);
    CHECK(std::abs(m.at(3, 1) - Complex(-oracles::li2_half_closed())) <= 1e-9);
    CHECK(std::abs(m.at(3, 2) - kTwoPiI * std::log(Complex(0.5))) <= 1e-12);
    CHECK(std::abs(m.at(3, 3) - kTwoPiI * kTwoPiI) == 0.0);
    // the upper triangle is exactly zero by construction
    CHECK(m.at(1, 2) == Complex(0.0));
    CHECK(m.at(1, 3) == Complex(0.0));
    CHECK(m.at(2, 3) == Complex(0.0));
    CHECK(std::abs(m.determinant() - kTwoPiI * kTwoPiI * kTwoPiI) <= 1e-9);
    CHECK(m.row_labels() == std::vector<std::string>{"e1", "e2", "e3"});
    CHECK(m.col_labels() == std::vector<std::string>{"b1", "b2", "b3"});
}

TEST_CASE("period matrix at z = -1 uses the alternating dilogarithm") {
    // on the unit circle the absolute tail bound decays like 1/N, so the
    // tolerance has to stay moderate
    const auto m = period_matrix(Complex(-1.0), 1e-7);
    CHECK(std::abs(m.at(2, 1) - Complex(std::log(2.0))) <= 1e-12); // -Li_1(-1) = +log 2
    CHECK(std::abs(m.at(3, 1) - Complex(-oracles::li2_minus_one())) <= 2e-7);
}

TEST_CASE("period matrix continues past the unit disk through quadrature") {
    // z real above 1 obstructs the straight path; a detour restores it
    CHECK_THROWS_AS(period_matrix(Complex(2.5), 1e-8), Error);
    const PathSpec detour = PathSpec::through({Complex(0.4, -0.3)});
    const auto m = period_matrix(Complex(2.5), 1e-8, &detour);
    const Complex li2 = -m.at(3, 1);
    const Complex upper = oracles::dilog_off_cut(Complex(2.5, 1e-9));
    const Complex lower = oracles::dilog_off_cut(Complex(2.5, -1e-9));
    const double d = std::min(std::abs(li2 - upper), std::abs(li2 - lower));
    CHECK(d <= 1e-5);
}

TEST_CASE("period matrix degenerates at z = 1") {
    const auto m = period_matrix(Complex(1.0), 1e-7);
    REQUIRE(m.size == 2);
    CHECK(std::abs(m.at(1, 1) - Complex(1.0)) == 0.0);
    CHECK(std::abs(m.at(2, 1) - Complex(-kPi * kPi / 6.0)) <= 1e-6);
    CHECK(std::abs(m.at(2, 2) - kTwoPiI * kTwoPiI) == 0.0);
    CHECK(m.at(1, 2) == Complex(0.0));
    CHECK(m.row_labels() == std::vector<std::string>{"e1", "e3"});
    CHECK(std::abs(m.determinant() - kTwoPiI * kTwoPiI) <= 1e-6);
}

TEST_CASE("z = 0 is outside the construction") {
    CHECK_THROWS_AS(period_matrix(Complex(0.0), 1e-8), Error);
}

TEST_CASE("tube pairings at z = 1/2") {
    const auto p = tube_pairings(Complex(0.5), 0.05, 256);
    CHECK(std::abs(p.e2_b2 - kTwoPiI) <= 1e-8);
    CHECK(std::abs(p.e3_b2 - kTwoPiI * std::log(Complex(0.5))) <= 1e-6);

    // radius independence under homotopy of the cycle
    const auto q = tube_pairings(Complex(0.5), 0.025, 256);
    CHECK(std::abs(p.e2_b2 - q.e2_b2) <= 1e-6);
    CHECK(std::abs(p.e3_b2 - q.e3_b2) <= 1e-6);
}

TEST_CASE("tube pairing guards") {
    CHECK_THROWS_AS(tube_pairings(Complex(0.5), 0.6, 256), Error);  // radius too large
    CHECK_THROWS_AS(tube_pairings(Complex(0.5), 0.05, 32), Error);  // grid too coarse
    CHECK_THROWS_AS(tube_pairings(Complex(1.0), 0.05, 256), Error); // z = 1 excluded
}

TEST_CASE("torus pairing is the square of the circle period") {
    const Complex t = torus_pairing(Complex(0.5), 0.05, 128);
    CHECK(std::abs(t - kTwoPiI * kTwoPiI) <= 1e-8);

    // factorization: the integrand splits into the two circle factors
    const Complex c(2.0);
    const Complex f1 = circle_integral(
        c, 0.05, [&](Complex t1) { return Complex(1.0) / (t1 - c); }, 128);
    const Complex f2 = circle_integral(
        Complex(0.0), 0.05, [&](Complex t2) { return Complex(1.0) / t2; }, 128);
    CHECK(std::abs(t - f1 * f2) <= 1e-10);
}

TEST_CASE("pentagon pairings reproduce the first column") {
    SUBCASE("z = 1/2") {
        const auto p = pentagon_pairings(Complex(0.5), PathSpec::straight(), 1e-8);
        CHECK(p.e1_b1 == Complex(1.0));
        CHECK(std::abs(p.e2_b1 - Complex(-std::log(2.0))) <= 1e-7);
        CHECK(std::abs(p.e3_b1 - Complex(-oracles::li2_half_closed())) <= 1e-7);
    }
    SUBCASE("z = -1") {
        const auto p = pentagon_pairings(Complex(-1.0), PathSpec::straight(), 1e-8);
        CHECK(p.e1_b1 == Complex(1.0));
        CHECK(std::abs(p.e2_b1 - Complex(std::log(2.0))) <= 1e-7);
        CHECK(std::abs(p.e3_b1 - Complex(kPi * kPi / 12.0)) <= 1e-7);
    }
}

TEST_CASE("the three cycle computations assemble the period matrix") {
    for (Complex z : {Complex(0.5), Complex(0.3, 0.4)}) {
        CAPTURE(z.real());
        CAPTURE(z.imag());
        const auto closed = period_matrix(z, 1e-9);
        const auto b1 = pentagon_pairings(z, PathSpec::straight(), 1e-9);
        const auto b2 = tube_pairings(z, 0.05, 512);
        const Complex b3 = torus_pairing(z, 0.05, 128);

        CHECK(std::abs(b1.e1_b1 - closed.at(1, 1)) <= 1e-8);
        CHECK(std::abs(b1.e2_b1 - closed.at(2, 1)) <= 1e-8);
        CHECK(std::abs(b1.e3_b1 - closed.at(3, 1)) <= 1e-8);
        CHECK(std::abs(b2.e2_b2 - closed.at(2, 2)) <= 1e-8);
        CHECK(std::abs(b2.e3_b2 - closed.at(3, 2)) <= 1e-6);
        CHECK(std::abs(b3 - closed.at(3, 3)) <= 1e-8);
    }
}

TEST_CASE("degeneration report along z -> 1") {
    const std::vector<Complex> zs{Complex(1.0 - 1e-3), Complex(1.0 - 1e-6)};
    const auto report = degeneration_report(zs, 1e-7);
    REQUIRE(report.samples.size() == 2);
    CHECK(std::abs(report.samples[0].matrix.at(2, 1) - Complex(std::log(1e-3))) <= 1e-9);
    CHECK(std::abs(report.samples[1].matrix.at(3, 2) - kTwoPiI * Complex(-1e-6)) <= 1e-9);
    CHECK(report.limit.size == 2);
    CHECK(std::abs(report.limit.at(2, 1) - Complex(-kPi * kPi / 6.0)) <= 1e-6);
    CHECK_THROWS_AS(degeneration_report(std::vector<Complex>{Complex(1.0)}, 1e-7), Error);
}

TEST_CASE("finite differences confirm the derivative relation") {
    // d/dz [-Li_2(z)] = -Li_1(z)/z = log(1-z)/z
    const double h = 1e-5;
    for (Complex z : {Complex(0.3), Complex(0.5), Complex(-0.4)}) {
        const auto up = period_matrix(z + h, 1e-12);
        const auto down = period_matrix(z - h, 1e-12);
        const Complex numeric = (up.at(3, 1) - down.at(3, 1)) / (2.0 * h);
        const Complex analytic = std::log(Complex(1.0) - z) / z;
        CHECK(std::abs(numeric - analytic) <= 1e-6);
    }
}

TEST_CASE("circle quadrature converges geometrically") {
    // off-center pole: each grid doubling multiplies the error down by far
    // more than 10x until the floating-point floor
    const Complex center(2.0);
    const double radius = 0.05;
    const Complex pole = center + Complex(0.6 * radius, 0.01);
    double previous = -1.0;
    for (int grid : {16, 32, 64}) {
        const Complex v = circle_integral(
            center, radius, [&](Complex t) { return Complex(1.0) / (t - pole); }, grid);
        const double err = std::abs(v - kTwoPiI);
        if (previous > 1e-14) CHECK(err * 10.0 <= previous);
        previous = err;
    }
}
