#include "modulilog/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "modulilog/errors.hpp"

namespace modulilog {

namespace {

// Legendre P_q and its derivative at x via the three-term recurrence.
std::pair<double, double> legendre(int q, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= q; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    const double dp = q * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

std::unique_ptr<GaussLegendre> build_rule(int q) {
    auto rule = std::make_unique<GaussLegendre>();
    rule->order = q;
    rule->nodes.resize(q);
    rule->weights.resize(q);
    for (int i = 0; i < q; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (q + 0.5));
        for (int it = 0; it < 64; ++it) {
            const auto [p, dp] = legendre(q, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const auto [p, dp] = legendre(q, x);
        (void)p;
        rule->nodes[q - 1 - i] = x; // cos ordering is descending
        rule->weights[q - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }

    // barycentric weights for stable evaluation of the Lagrange basis
    std::vector<double> bary(q, 1.0);
    for (int j = 0; j < q; ++j) {
        for (int k = 0; k < q; ++k)
            if (k != j) bary[j] /= rule->nodes[j] - rule->nodes[k];
    }

    // A(i,j) = integral of the j-th Lagrange basis from -1 to node i,
    // computed with the same rule mapped onto [-1, node_i]; exact since the
    // basis has degree q-1 <= 2q-1
    rule->antiderivative.assign(static_cast<std::size_t>(q) * q, 0.0);
    std::vector<double> basis(q);
    for (int i = 0; i < q; ++i) {
        const double upper = rule->nodes[i];
        const double half = (upper + 1.0) / 2.0;
        for (int g = 0; g < q; ++g) {
            const double t = -1.0 + half * (rule->nodes[g] + 1.0);
            double prod = 1.0;
            int hit = -1;
            for (int k = 0; k < q; ++k) {
                const double diff = t - rule->nodes[k];
                if (std::abs(diff) < 1e-14) hit = k;
                prod *= diff;
            }
            for (int j = 0; j < q; ++j) {
                if (hit >= 0)
                    basis[j] = j == hit ? 1.0 : 0.0;
                else
                    basis[j] = prod * bary[j] / (t - rule->nodes[j]);
            }
            const double w = rule->weights[g] * half;
            for (int j = 0; j < q; ++j)
                rule->antiderivative[static_cast<std::size_t>(i) * q + j] += w * basis[j];
        }
    }
    return rule;
}

} // namespace

const GaussLegendre& GaussLegendre::rule(int order) {
    if (order < 2 || order > 64) fail("precondition", "Gauss-Legendre order out of range");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendre>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
    return *it->second;
}

} // namespace modulilog
