#pragma once

// The dilogarithm period matrix: closed-form assembly of the 3x3 (or, at
// z = 1, 2x2) lower-triangular matrix of pairings between the de Rham
// cochains e_1, e_2, e_3 and the relative cycles b_1 (pentagon), b_2 (tube
// over a segment) and b_3 (torus), plus direct cycle quadratures for the
// individual pairings and the degeneration report along z -> 1.

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "modulilog/itint.hpp"
#include "modulilog/path_spec.hpp"

namespace modulilog {

// Rows are indexed by the cochains e_i, columns by the cycles b_j, so the
// entry (i, j) is the pairing <e_i, b_j>. Lower triangular with diagonal
// (1, 2*pi*i, (2*pi*i)^2); the 2x2 degenerate case at z = 1 keeps e_1/e_3
// against b_1/b_3.
struct PeriodMatrix {
    std::complex<double> z;
    int size = 3;
    std::array<std::array<std::complex<double>, 3>, 3> entries{};
    std::array<std::array<double, 3>, 3> est_errors{};

    std::complex<double> at(int i, int j) const { return entries[i - 1][j - 1]; } // 1-based
    std::complex<double> determinant() const;
    std::vector<std::string> row_labels() const;
    std::vector<std::string> col_labels() const;
};

// [[1,0,0], [-Li_1(z), 2*pi*i, 0], [-Li_2(z), 2*pi*i*log z, (2*pi*i)^2]]
// with Li_1(z) = -log(1-z), Li_2 by series for |z| <= 1 and by sign-corrected
// path quadrature beyond the disk; principal branches throughout. At z = 1
// the 2x2 matrix [[1,0], [-Li_2(1), (2*pi*i)^2]].
PeriodMatrix period_matrix(std::complex<double> z, double tol,
                           const PathSpec* path = nullptr);

struct TubePairings {
    std::complex<double> e2_b2; // 2*pi*i
    std::complex<double> e3_b2; // 2*pi*i*log z
};

// Quadrature over the tube cycle around t_1 = 1/z: the circle integral of
// dt_1/(t_1 - 1/z) and the 2-form integral over the parametrized surface
// (trapezoid in the periodic direction, Gauss-Legendre across the segment).
TubePairings tube_pairings(std::complex<double> z, double eps, int grid);

// Torus quadrature of dt_1/(t_1 - 1/z) ^ dt_2/t_2, equal to (2*pi*i)^2.
std::complex<double> torus_pairing(std::complex<double> z, double eps, int grid);

struct PentagonPairings {
    std::complex<double> e1_b1; // 1, counted at the distinguished vertex
    std::complex<double> e2_b1; // -Li_1(z)
    std::complex<double> e3_b1; // -Li_2(z)
    double est_error = 0.0;
};

// Pairings against the pentagon cycle: a combinatorial count over the five
// vertices of B_2 for e_1, and path quadratures along the pentagon side for
// e_2 and e_3.
PentagonPairings pentagon_pairings(std::complex<double> z, const PathSpec& path, double tol);

struct DegenerationSample {
    std::complex<double> z;
    PeriodMatrix matrix;
};

struct DegenerationReport {
    std::vector<DegenerationSample> samples;
    PeriodMatrix limit; // the 2x2 matrix at z = 1
};

// Records the 3x3 matrices along a sequence z -> 1 next to the degenerate
// limit: the -Li_1 entry diverges while the 2*pi*i*log z entry vanishes,
// and the rank drops from 3 to 2.
DegenerationReport degeneration_report(std::span<const std::complex<double>> zs, double tol);

} // namespace modulilog
