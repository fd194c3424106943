#pragma once

#include <complex>
#include <numbers>
#include <vector>

namespace modulilog {

// Gauss-Legendre rule on [-1, 1] together with the node-level antiderivative
// matrix: given integrand values g_j at the nodes, sum_j A(i,j) g_j is the
// integral of the interpolating polynomial from -1 up to node i. Exact for
// polynomials of degree < order.
struct GaussLegendre {
    int order = 0;
    std::vector<double> nodes;   // ascending
    std::vector<double> weights;
    std::vector<double> antiderivative; // row-major, order x order

    double anti(int i, int j) const { return antiderivative[i * order + j]; }

    static const GaussLegendre& rule(int order);
};

// Trapezoid quadrature of a contour integral over the positively oriented
// circle |t - center| = radius; geometrically convergent for integrands
// analytic in a neighborhood of the circle.
template <class F>
std::complex<double> circle_integral(std::complex<double> center, double radius, F&& f,
                                     int grid) {
    const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
    std::complex<double> acc(0.0);
    for (int j = 0; j < grid; ++j) {
        const double u = static_cast<double>(j) / grid;
        const std::complex<double> e = std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi * u));
        acc += f(center + radius * e) * e;
    }
    return acc * two_pi_i * radius / static_cast<double>(grid);
}

} // namespace modulilog
