#include "modulilog/itint.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "modulilog/quadrature.hpp"

namespace modulilog {

namespace {

using Complex = std::complex<double>;

struct KahanSum {
    Complex sum{0.0};
    Complex carry{0.0};

    void add(Complex v) {
        const Complex y = v - carry;
        const Complex t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

using Panels = std::vector<std::pair<Complex, Complex>>;

// Replace the first (or last) panel by a dyadic chain shrinking toward the
// endpoint; resolves the logarithmic blow-up of the inner partial integrals
// at t = 0 and t = 1.
Panels dyadic_endpoints(Panels panels, int depth) {
    {
        const auto [p0, p1] = panels.front();
        Panels chain;
        Complex cur = p0;
        for (int d = depth; d >= 1; --d) {
            const Complex next = p0 + (p1 - p0) * std::ldexp(1.0, -d);
            chain.emplace_back(cur, next);
            cur = next;
        }
        chain.emplace_back(cur, p1);
        panels.erase(panels.begin());
        panels.insert(panels.begin(), chain.begin(), chain.end());
    }
    {
        const auto [p0, p1] = panels.back();
        Panels chain;
        Complex cur = p1;
        for (int d = depth; d >= 1; --d) {
            const Complex next = p1 - (p1 - p0) * std::ldexp(1.0, -d);
            chain.emplace_back(next, cur);
            cur = next;
        }
        chain.emplace_back(p0, cur);
        std::reverse(chain.begin(), chain.end());
        panels.pop_back();
        panels.insert(panels.end(), chain.begin(), chain.end());
    }
    return panels;
}

Panels build_panels(const PathSpec& path, const AVector& a, double tol) {
    Panels base;
    for (std::size_t j = 0; j + 1 < path.waypoints.size(); ++j)
        base.emplace_back(path.waypoints[j], path.waypoints[j + 1]);

    const int depth =
        std::clamp(static_cast<int>(std::ceil(std::log2(1.0 / tol))) + 8, 16, 48);
    base = dyadic_endpoints(std::move(base), depth);

    // panels stay shorter than half their distance to any singular value off
    // the path endpoints, so the per-panel integrands remain well resolved
    const Complex start = path.waypoints.front();
    const Complex end = path.waypoints.back();
    Panels out;
    out.reserve(base.size());
    std::function<void(Complex, Complex, int)> emit = [&](Complex s, Complex e, int guard) {
        const double len = std::abs(e - s);
        double dist = std::numeric_limits<double>::infinity();
        for (const Complex& c : a.values) {
            if (c == start || c == end) continue;
            dist = std::min(dist, distance_to_segment(c, s, e));
        }
        if (guard < 60 && len > 0.5 * dist) {
            const Complex mid = 0.5 * (s + e);
            emit(s, mid, guard + 1);
            emit(mid, e, guard + 1);
        } else {
            out.emplace_back(s, e);
        }
    };
    for (const auto& [s, e] : base) emit(s, e, 0);
    return out;
}

Panels halve(const Panels& panels) {
    Panels out;
    out.reserve(panels.size() * 2);
    for (const auto& [s, e] : panels) {
        const Complex mid = 0.5 * (s + e);
        out.emplace_back(s, mid);
        out.emplace_back(mid, e);
    }
    return out;
}

// One full evaluation of the nested integral on a fixed panel set: for each
// level k, the running antiderivative F_k is tabulated at every panel node
// from the previous level's table, and the outermost cumulative total is the
// value of the integral.
Complex evaluate(const Panels& panels, const GaussLegendre& gl,
                 std::span<const Complex> avals) {
    const int q = gl.order;
    const std::size_t total = panels.size() * static_cast<std::size_t>(q);

    std::vector<Complex> nodes(total);
    std::vector<Complex> jacobian(panels.size());
    for (std::size_t p = 0; p < panels.size(); ++p) {
        const auto [s, e] = panels[p];
        jacobian[p] = 0.5 * (e - s);
        const Complex mid = 0.5 * (s + e);
        for (int i = 0; i < q; ++i)
            nodes[p * q + i] = mid + jacobian[p] * gl.nodes[i];
    }

    std::vector<Complex> table(total, Complex(1.0));
    std::vector<Complex> next(total);
    std::vector<Complex> g(q);
    Complex result(0.0);
    for (const Complex& a : avals) {
        KahanSum cumulative;
        for (std::size_t p = 0; p < panels.size(); ++p) {
            const Complex* t = &nodes[p * q];
            const Complex* f = &table[p * q];
            for (int i = 0; i < q; ++i) g[i] = f[i] / (t[i] - a);

            Complex* out = &next[p * q];
            for (int i = 0; i < q; ++i) {
                Complex acc(0.0);
                const double* row = &gl.antiderivative[static_cast<std::size_t>(i) * q];
                for (int j = 0; j < q; ++j) acc += row[j] * g[j];
                out[i] = cumulative.sum + jacobian[p] * acc;
            }

            Complex panel_integral(0.0);
            for (int i = 0; i < q; ++i) panel_integral += gl.weights[i] * g[i];
            cumulative.add(jacobian[p] * panel_integral);
        }
        table.swap(next);
        result = cumulative.sum;
    }
    return result;
}

} // namespace

QuadratureResult iterated_integral(const AVector& a, const PathSpec& path, double tol,
                                   const ItintOptions& options) {
    if (a.n() < 1) fail("precondition", "iterated integral needs at least one form");
    if (a.n() > options.max_depth)
        fail("precondition", "weight " + std::to_string(a.n()) +
                                 " exceeds the configured depth limit " +
                                 std::to_string(options.max_depth));
    a.ensure_finite();
    if (!a.flags_ok())
        fail("precondition", "convergence needs a_1 != 0 and a_n != 1");
    if (tol <= 0.0) fail("precondition", "tol must be positive");
    path.validate_geometry();
    path.validate_clearance(a);

    const GaussLegendre& gl = GaussLegendre::rule(options.nodes);
    Panels panels = build_panels(path, a, tol);
    if (static_cast<long>(panels.size()) > options.max_panels)
        fail("budget_exhausted", "initial panel layout exceeds the panel budget");

    Complex previous = evaluate(panels, gl, a.values);
    for (int round = 0; round < options.max_rounds; ++round) {
        if (static_cast<long>(panels.size()) * 2 > options.max_panels)
            fail("budget_exhausted", "panel budget exhausted before reaching tolerance");
        panels = halve(panels);
        const Complex current = evaluate(panels, gl, a.values);
        const double est = std::abs(current - previous);
        if (est <= 0.5 * tol)
            return QuadratureResult{current, est, static_cast<long>(panels.size())};
        previous = current;
    }
    fail("budget_exhausted", "refinement rounds exhausted before reaching tolerance");
}

IndexedAVector singularity_vector(const PolylogIndex& idx, std::span<const Complex> x) {
    const int m = idx.depth();
    if (static_cast<int>(x.size()) != m)
        fail("precondition", "need exactly one argument per index entry");
    for (const Complex& v : x) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            fail("precondition", "arguments must be finite");
        if (v == Complex(0.0))
            fail("precondition", "singularity vector needs all x_i non-zero");
    }

    std::vector<Complex> suffix(m); // suffix[i] = x_i * x_{i+1} * ... * x_m
    Complex prod(1.0);
    for (int i = m - 1; i >= 0; --i) {
        prod *= x[i];
        suffix[i] = prod;
    }

    IndexedAVector out;
    out.sign = m % 2 == 0 ? 1 : -1;
    for (int i = 0; i < m; ++i) {
        out.a.values.push_back(Complex(1.0) / suffix[i]);
        for (int z = 1; z < idx.indices[i]; ++z) out.a.values.push_back(Complex(0.0));
    }
    return out;
}

HomotopyReport homotopy_check(const AVector& a, const PathSpec& p1, const PathSpec& p2,
                              double tol, const ItintOptions& options) {
    HomotopyReport report;
    report.first = iterated_integral(a, p1, tol / 4.0, options);
    report.second = iterated_integral(a, p2, tol / 4.0, options);
    report.delta = report.first.value - report.second.value;
    report.agree = std::abs(report.delta) <= tol;
    return report;
}

} // namespace modulilog
