#include "modulilog/period.hpp"

#include <cmath>
#include <numbers>

#include "modulilog/quadrature.hpp"
#include "modulilog/stasheff.hpp"

namespace modulilog {

namespace {

using Complex = std::complex<double>;

const Complex kTwoPiI(0.0, 2.0 * std::numbers::pi);

void check_z(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        fail("precondition", "z must be finite");
    if (z == Complex(0.0)) fail("domain", "the construction needs z != 0");
}

void check_cycle_params(Complex z, double eps, int grid) {
    check_z(z);
    if (z == Complex(1.0)) fail("domain", "cycle pairings need z != 1");
    if (grid < 64) fail("precondition", "grid must be at least 64");
    const Complex c = Complex(1.0) / z;
    if (!(eps > 0.0) || eps >= std::min(std::abs(c), std::abs(c - Complex(1.0))) / 4.0)
        fail("eps_too_large", "cycle radius must stay below min(|1/z|, |1/z - 1|)/4");
}

Complex dilog_value(Complex z, double tol, const PathSpec* path, double& est) {
    if (std::abs(z) <= 1.0) {
        const auto series = polylog_series(PolylogIndex{2}, std::vector<Complex>{z}, tol);
        est = series.tail_bound;
        return series.value;
    }
    // continuation through the integral representation, sign-corrected
    const PathSpec p = path ? *path : PathSpec::straight();
    const auto quad = iterated_integral(AVector{{Complex(1.0) / z, Complex(0.0)}}, p, tol);
    est = quad.est_error;
    return -quad.value;
}

} // namespace

Complex PeriodMatrix::determinant() const {
    const auto& e = entries;
    if (size == 2) return e[0][0] * e[1][1] - e[0][1] * e[1][0];
    return e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
           e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
           e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
}

std::vector<std::string> PeriodMatrix::row_labels() const {
    return size == 2 ? std::vector<std::string>{"e1", "e3"}
                     : std::vector<std::string>{"e1", "e2", "e3"};
}

std::vector<std::string> PeriodMatrix::col_labels() const {
    return size == 2 ? std::vector<std::string>{"b1", "b3"}
                     : std::vector<std::string>{"b1", "b2", "b3"};
}

PeriodMatrix period_matrix(Complex z, double tol, const PathSpec* path) {
    check_z(z);
    if (tol <= 0.0) fail("precondition", "tol must be positive");

    PeriodMatrix out;
    out.z = z;
    if (z == Complex(1.0)) {
        out.size = 2;
        const auto zeta2 = mzv(PolylogIndex{2}, tol);
        out.entries[0][0] = 1.0;
        out.entries[1][0] = -zeta2.value;
        out.entries[1][1] = kTwoPiI * kTwoPiI;
        out.est_errors[1][0] = zeta2.tail_bound;
        return out;
    }

    out.size = 3;
    double li2_est = 0.0;
    const Complex li1 = -std::log(Complex(1.0) - z);
    const Complex li2 = dilog_value(z, tol, path, li2_est);
    out.entries[0][0] = 1.0;
    out.entries[1][0] = -li1;
    out.entries[1][1] = kTwoPiI;
    out.entries[2][0] = -li2;
    out.entries[2][1] = kTwoPiI * std::log(z);
    out.entries[2][2] = kTwoPiI * kTwoPiI;
    out.est_errors[2][0] = li2_est;
    return out;
}

TubePairings tube_pairings(Complex z, double eps, int grid) {
    check_cycle_params(z, eps, grid);
    const Complex c = Complex(1.0) / z;

    TubePairings out;
    out.e2_b2 = circle_integral(
        c, eps, [&](Complex t) { return Complex(1.0) / (t - c); }, grid);

    // pulled back to the (u, v) square the 2-form reads
    //   [t_1'(u)/(t_1(u) - c)] * (1 - t_1(u)) / t_2(u, v) du dv,
    // periodic analytic in u (trapezoid) and analytic but not periodic in v
    // (Gauss-Legendre); no logarithm is ever evaluated, so there is no branch
    // bookkeeping on the cycle
    const GaussLegendre& gl = GaussLegendre::rule(std::min(grid, 48));
    Complex acc(0.0);
    for (int ju = 0; ju < grid; ++ju) {
        const double u = static_cast<double>(ju) / grid;
        const Complex e = std::exp(Complex(0.0, 2.0 * std::numbers::pi * u));
        const Complex t1 = c + eps * e;
        const Complex dt1 = kTwoPiI * eps * e;
        Complex inner(0.0);
        for (int g = 0; g < gl.order; ++g) {
            const double v = 0.5 * (gl.nodes[g] + 1.0);
            const Complex t2 = v + (1.0 - v) * t1;
            if (std::abs(t2) < 1e-9)
                fail("eps_too_large", "tube cycle touches the t_2 = 0 component");
            inner += 0.5 * gl.weights[g] * (Complex(1.0) - t1) / t2;
        }
        acc += dt1 / (t1 - c) * inner;
    }
    out.e3_b2 = acc / static_cast<double>(grid);
    return out;
}

Complex torus_pairing(Complex z, double eps, int grid) {
    check_cycle_params(z, eps, grid);
    const Complex c = Complex(1.0) / z;
    Complex acc(0.0);
    for (int ju = 0; ju < grid; ++ju) {
        const Complex eu =
            std::exp(Complex(0.0, 2.0 * std::numbers::pi * ju / grid));
        const Complex t1 = c + eps * eu;
        const Complex dt1 = kTwoPiI * eps * eu;
        Complex row(0.0);
        for (int jv = 0; jv < grid; ++jv) {
            const Complex ev =
                std::exp(Complex(0.0, 2.0 * std::numbers::pi * jv / grid));
            const Complex t2 = eps * ev;
            const Complex dt2 = kTwoPiI * eps * ev;
            row += dt2 / t2;
        }
        acc += dt1 / (t1 - c) * row;
    }
    return acc / (static_cast<double>(grid) * grid);
}

PentagonPairings pentagon_pairings(Complex z, const PathSpec& path, double tol) {
    check_z(z);
    if (z == Complex(1.0)) fail("domain", "pentagon pairings need z != 1");
    const Complex c = Complex(1.0) / z;

    PentagonPairings out;

    // e_1 pairs the indicator of the distinguished corner of the pentagon
    // with the sum of all five corners of B_2
    const MarkedSet host(2);
    const Face corner{GoodFamily(
        host, {StablePartition::from_marks(host, std::array{Mark::zero(), Mark::s(1)}),
               StablePartition::from_marks(host, std::array{Mark::s(2), Mark::one()})})};
    double count = 0.0;
    for (const Face& v : vertices(2))
        if (v == corner) count += 1.0;
    out.e1_b1 = count;

    const auto first = iterated_integral(AVector{{c}}, path, tol);
    const auto second = iterated_integral(AVector{{c, Complex(0.0)}}, path, tol);
    out.e2_b1 = first.value;
    out.e3_b1 = second.value;
    out.est_error = first.est_error + second.est_error;
    return out;
}

DegenerationReport degeneration_report(std::span<const Complex> zs, double tol) {
    DegenerationReport out;
    for (const Complex& z : zs) {
        if (z == Complex(1.0))
            fail("precondition", "degeneration samples must approach 1 without reaching it");
        out.samples.push_back(DegenerationSample{z, period_matrix(z, tol)});
    }
    out.limit = period_matrix(Complex(1.0), tol);
    return out;
}

} // namespace modulilog
