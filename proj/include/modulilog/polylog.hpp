#pragma once

// Multiple polylogarithms as nested power series
//   sum over 0 < k_1 < ... < k_m of  x_1^{k_1} ... x_m^{k_m} / (k_1^{n_1} ... k_m^{n_m})
// evaluated by a single forward sweep with per-level prefix sums, stopping on
// a rigorous tail bound. Multiple zeta values are the all-ones specialization.

#include <complex>
#include <span>
#include <vector>

#include "modulilog/errors.hpp"

namespace modulilog {

struct PolylogIndex {
    std::vector<int> indices;
    // allows the tail exponent n_m = 1 for experiments with |x_m| < 1
    bool allow_divergent_tail = false;

    explicit PolylogIndex(std::vector<int> idx, bool allow_tail = false);
    PolylogIndex(std::initializer_list<int> idx) : PolylogIndex(std::vector<int>(idx)) {}

    int depth() const { return static_cast<int>(indices.size()); }
    int weight() const;
    bool convergent_shape() const { return indices.back() >= 2; }
};

struct SeriesResult {
    std::complex<double> value;
    double tail_bound = 0.0;
    long terms = 0;
};

inline constexpr long kDefaultMaxTerms = 200'000'000;

// Partial sum of the defining series with compensated accumulation; returns
// once the remaining tail is provably below `tol`. Requires |x_i| <= 1 and a
// convergent shape (tail exponent >= 2), unless the override admits |x_m| < 1.
SeriesResult polylog_series(const PolylogIndex& idx, std::span<const std::complex<double>> x,
                            double tol, long max_terms = kDefaultMaxTerms);

// The series at x = (1, ..., 1); the shape constraint is mandatory here.
SeriesResult mzv(const PolylogIndex& idx, double tol, long max_terms = 2 * kDefaultMaxTerms);

} // namespace modulilog
