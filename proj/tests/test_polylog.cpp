#include "doctest.h"

#include <numbers>

#include "modulilog/polylog.hpp"

#include "oracles.hpp"

using namespace modulilog;

namespace {

using Complex = std::complex<double>;

double dist(Complex a, double b) { return std::abs(a - Complex(b)); }

} // namespace

TEST_CASE("index shapes") {
    CHECK(PolylogIndex{2}.weight() == 2);
    CHECK(PolylogIndex{1, 2}.weight() == 3);
    CHECK(PolylogIndex{1, 2}.convergent_shape());
    CHECK_FALSE(PolylogIndex{2, 1}.convergent_shape());
    CHECK_THROWS_AS(PolylogIndex(std::vector<int>{}), Error);
    CHECK_THROWS_AS(PolylogIndex(std::vector<int>{1, 0}), Error);
}

TEST_CASE("depth-one series against direct summation") {
    SUBCASE("zeta(2) through the series at x = 1") {
        const auto r = polylog_series(PolylogIndex{2}, std::vector<Complex>{Complex(1.0)}, 1e-7);
        CHECK(dist(r.value, oracles::zeta2_direct()) <= r.tail_bound + 1e-12);
        CHECK(dist(r.value, std::numbers::pi * std::numbers::pi / 6.0) <= 1e-7);
    }
    SUBCASE("weight one has the logarithm closed form") {
        const auto r = polylog_series(PolylogIndex(std::vector<int>{1}, true),
                                      std::vector<Complex>{Complex(0.5)}, 1e-10);
        CHECK(dist(r.value, std::log(2.0)) <= 1e-10);
    }
}

TEST_CASE("the double series at (1,1) reaches zeta(3)") {
    const auto r = polylog_series(PolylogIndex{1, 2},
                                  std::vector<Complex>{Complex(1.0), Complex(1.0)}, 1e-5);
    const double oracle = oracles::zeta12_double_sum();
    CHECK(dist(r.value, oracle) <= r.tail_bound + 1e-9);
    CHECK(std::abs(oracle - oracles::zeta3_direct()) <= 1e-9); // Euler's identity, numerically
}

TEST_CASE("multiple zeta values") {
    CHECK(dist(mzv(PolylogIndex{2}, 1e-7).value, std::numbers::pi * std::numbers::pi / 6.0) <=
          2e-7);
    CHECK(dist(mzv(PolylogIndex{3}, 1e-9).value, oracles::zeta3_direct()) <= 2e-9);
    CHECK(dist(mzv(PolylogIndex{1, 2}, 1e-5).value, oracles::zeta3_direct()) <= 2e-5);
    CHECK_THROWS_AS(mzv(PolylogIndex{2, 1}, 1e-6), Error);
    // the override never applies to zeta values
    CHECK_THROWS_AS(mzv(PolylogIndex(std::vector<int>{1, 1}, true), 1e-6), Error);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_WITH_AS(
        polylog_series(PolylogIndex{2}, std::vector<Complex>{Complex(1.5)}, 1e-6),
        doctest::Contains("|x_i| <= 1"), Error);
    CHECK_THROWS_AS(polylog_series(PolylogIndex{1}, std::vector<Complex>{Complex(1.0)}, 1e-6),
                    Error);
    CHECK_THROWS_AS(polylog_series(PolylogIndex(std::vector<int>{1}, true),
                                   std::vector<Complex>{Complex(1.0)}, 1e-6),
                    Error);
    CHECK_THROWS_AS(polylog_series(PolylogIndex{2}, std::vector<Complex>{Complex(1.0)}, 1e-6, 100),
                    Error); // budget
    CHECK_THROWS_AS(polylog_series(PolylogIndex{2}, std::vector<Complex>{}, 1e-6), Error);
}

TEST_CASE("tail bounds are honest across tolerances") {
    const std::vector<Complex> x{Complex(0.7)};
    double previous = 1.0;
    for (double tol : {1e-4, 1e-6, 1e-8}) {
        const auto r = polylog_series(PolylogIndex{2}, x, tol);
        // compare against a much tighter run of the same series
        const auto tight = polylog_series(PolylogIndex{2}, x, 1e-13);
        const double err = std::abs(r.value - tight.value);
        CHECK(err <= r.tail_bound + 1e-13);
        CHECK(err <= previous + 1e-13); // refinement never degrades
        previous = err;
    }
}

TEST_CASE("the dilogarithm at i splits into pi^2/48 and Catalan's constant") {
    const double catalan = 0.9159655941772190;
    const auto r = polylog_series(PolylogIndex{2}, std::vector<Complex>{Complex(0.0, 1.0)}, 1e-6);
    CHECK(std::abs(r.value.real() + std::numbers::pi * std::numbers::pi / 48.0) <= 2e-6);
    CHECK(std::abs(r.value.imag() - catalan) <= 2e-6);
}

TEST_CASE("vanishing arguments kill the series") {
    const auto r = polylog_series(PolylogIndex{2, 2},
                                  std::vector<Complex>{Complex(0.0), Complex(0.5)}, 1e-9);
    CHECK(std::abs(r.value) == 0.0);
}
