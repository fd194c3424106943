#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "modulilog/errors.hpp"

namespace modulilog {

// The singularity vector (a_{s_1}, ..., a_{s_n}) of the meromorphic n-form
// whose factors are d(beta_i)/(beta_i - a_i). Entries are finite complex
// numbers; the convergence flags ask a_1 != 0 and a_n != 1. `match_eps`
// widens the exact 0/1 membership tests for floating inputs (default exact).
struct AVector {
    std::vector<std::complex<double>> values;
    double match_eps = 0.0;

    int n() const { return static_cast<int>(values.size()); }

    std::complex<double> at(int i) const { // 1-based
        if (i < 1 || i > n()) fail("precondition", "a-vector index out of range");
        return values[static_cast<std::size_t>(i) - 1];
    }

    bool entry_is(int i, double target) const {
        return std::abs(at(i) - std::complex<double>(target)) <= match_eps;
    }

    bool first_nonzero() const { return n() >= 1 && !entry_is(1, 0.0); }
    bool last_not_one() const { return n() >= 1 && !entry_is(n(), 1.0); }
    bool flags_ok() const { return first_nonzero() && last_not_one(); }

    void ensure_finite() const {
        for (const auto& v : values)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                fail("precondition", "a-vector entries must be finite complex numbers");
    }
};

} // namespace modulilog
