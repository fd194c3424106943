#pragma once

// Numerical iterated integrals along piecewise linear paths,
//   int_gamma dt/(t - a_1) o ... o dt/(t - a_n),
// evaluated level by level through the inductive definition: node tables of
// each partial integral are propagated with composite Gauss-Legendre panels,
// geometrically refined toward the path endpoints where the inner integrands
// pick up logarithmic behavior. Also the translation of a polylog index and
// argument tuple to its singularity vector, and a two-path comparison
// diagnostic for homotopy questions.

#include <complex>
#include <span>

#include "modulilog/avector.hpp"
#include "modulilog/path_spec.hpp"
#include "modulilog/polylog.hpp"

namespace modulilog {

struct QuadratureResult {
    std::complex<double> value;
    double est_error = 0.0;
    long panels = 0;
};

struct ItintOptions {
    int max_depth = 4;       // weight guard; override deliberately for higher weights
    long max_panels = 1 << 16;
    int nodes = 16;          // Gauss-Legendre points per panel
    int max_rounds = 14;     // uniform refinement rounds
};

QuadratureResult iterated_integral(const AVector& a, const PathSpec& path, double tol,
                                   const ItintOptions& options = {});

struct IndexedAVector {
    AVector a;
    int sign = 1; // (-1)^m relating the integral to the series value
};

// Singularity vector of a multiple polylogarithm: one entry 1/(x_i ... x_m)
// opening each index group, followed by n_i - 1 zeros. All x_i must be
// non-zero; sign * integral equals the series value.
IndexedAVector singularity_vector(const PolylogIndex& idx,
                                  std::span<const std::complex<double>> x);

struct HomotopyReport {
    bool agree = false;
    std::complex<double> delta;
    QuadratureResult first;
    QuadratureResult second;
};

// delta = I(p1) - I(p2). Zero (within tol) when the paths are homotopic off
// the singularities; a period-type quantity when they separate some a_i.
HomotopyReport homotopy_check(const AVector& a, const PathSpec& p1, const PathSpec& p2,
                              double tol, const ItintOptions& options = {});

} // namespace modulilog
