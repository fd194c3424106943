#pragma once

// The divisor of singularities of the n-form attached to a singularity
// vector: boundary components typed by which special value (0, 1 or inf)
// they absorb, plus fibers of the forgetful maps over the remaining a-values.
// Includes the classification of fiber/boundary intersections and the
// exhaustive checker that no face of B_n lies inside the singular locus.

#include <complex>
#include <optional>
#include <vector>

#include "modulilog/avector.hpp"
#include "modulilog/cyclic.hpp"
#include "modulilog/stasheff.hpp"

namespace modulilog {

// Masks over the positions of movable marks whose a-value equals 0 resp. 1;
// the inf class is always all movable marks.
struct AlphaSets {
    MarkMask zero = 0;
    MarkMask one = 0;
    MarkMask movable = 0;

    MarkMask zero_or_one() const { return zero | one; }
};

AlphaSets alpha_sets(const MarkedSet& host, const AVector& a);

enum class AlphaType { zero, one, infinity };

std::string to_string(AlphaType type);

struct BoundaryComponent {
    StablePartition partition;
    AlphaType type;

    friend bool operator==(const BoundaryComponent&, const BoundaryComponent&) = default;
};

struct NonBoundaryComponent {
    int index; // 1-based movable mark index
    std::complex<double> value;

    friend bool operator==(const NonBoundaryComponent&, const NonBoundaryComponent&) = default;
};

struct SingularLocus {
    std::vector<BoundaryComponent> boundary;
    std::vector<NonBoundaryComponent> nonboundary;
};

// All irreducible components of the singular divisor: boundary partitions
// with one part {alpha} union T for a non-empty T inside the alpha class,
// and one fiber marker (i, a_i) for every a_i off {0, 1}.
SingularLocus singular_locus(const MarkedSet& host, const AVector& a);

struct FiberProduct {
    MarkMask big_side; // the part meeting {0, s_i, 1, inf} in >= 3 labels
    Mark attach;       // the mark adjoined to the big side in the product chart
};

// How the fiber over `value` of the i-th forgetful map meets the boundary
// divisor of `sigma`: empty exactly when sigma restricts to a stable 2|2
// partition of {0, s_i, 1, inf}; otherwise the intersection is a product and
// the combinatorial data of that chart is returned.
std::optional<FiberProduct> classify_fiber_intersection(const MarkedSet& host, int i,
                                                        std::complex<double> value,
                                                        const StablePartition& sigma);

struct AvoidanceViolation {
    Face face;
    std::optional<BoundaryComponent> boundary_hit;
    std::optional<NonBoundaryComponent> fiber_hit;
};

struct AvoidanceReport {
    int n = 0;
    AVector a;
    bool flags_ok = false;
    SingularLocus locus;
    long faces_checked = 0;
    std::vector<AvoidanceViolation> violations;
};

// Scan every face of B_n against every component of the singular locus.
// A face lies in a boundary component iff that partition belongs to its
// family; containment in a fiber component reduces to the vertices, whose
// images under the forgetful maps are always 0 or 1. With the convergence
// flags satisfied the violation list must come back empty.
AvoidanceReport check_avoidance(int n, const AVector& a);

} // namespace modulilog
