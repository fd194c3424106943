#pragma once

#include <complex>
#include <vector>

#include "modulilog/avector.hpp"

namespace modulilog {

// A piecewise linear simple path from 0 to 1 in the complex plane, given by
// its waypoints. Geometry (endpoints, simplicity) is validated on demand;
// singularity clearance is checked per a-vector at call time, allowing
// singular values that coincide with the path endpoints themselves.
struct PathSpec {
    std::vector<std::complex<double>> waypoints;
    double min_clearance = 1e-9;

    static PathSpec straight() { return PathSpec{{{0.0, 0.0}, {1.0, 0.0}}}; }
    static PathSpec through(std::vector<std::complex<double>> interior);

    int segments() const { return static_cast<int>(waypoints.size()) - 1; }

    void validate_geometry() const;
    void validate_clearance(const AVector& a) const;
};

double distance_to_segment(std::complex<double> p, std::complex<double> a,
                           std::complex<double> b);

} // namespace modulilog
