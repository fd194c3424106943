#pragma once

// Enumeration of the algebraic Stasheff polytope B_n sitting inside the
// boundary of the genus-0 moduli space: facets are the strictly ordered
// stable 2-partitions, faces of codimension k are the size-k good families of
// facets, and vertices (k = n) correspond to triangulations of the
// (n+3)-gon. Also the combinatorial action of contraction morphisms on faces
// and the image of a vertex under the map remembering only {0, s_i, 1, inf}.

#include <string>
#include <vector>

#include "modulilog/cyclic.hpp"

namespace modulilog {

// A non-empty boundary stratum of B_n: a good family of strictly ordered
// partitions. Codimension equals the family size; codimension n is a vertex.
class Face {
public:
    explicit Face(GoodFamily family);

    const GoodFamily& family() const { return family_; }
    const MarkedSet& host() const { return family_.host(); }
    int codim() const { return family_.size(); }
    bool is_vertex() const { return codim() == host().n(); }

    std::string to_string() const;

    friend bool operator==(const Face&, const Face&) = default;

private:
    GoodFamily family_;
};

// All facets of B_n, i.e. all strictly ordered stable partitions, sorted by
// canonical part mask. There are n(n+3)/2 of them.
std::vector<StablePartition> facets(int n);

// All codimension-k faces, enumerated by backtracking over the facet
// compatibility graph; output in lexicographic order of member masks.
std::vector<Face> faces(int n, int k);

// faces(n, n); the count is the Catalan number C_{n+1}.
std::vector<Face> vertices(int n);

enum class VertexImage { zero_point, one_point };

std::string to_string(VertexImage image);

// Image of a vertex under the contraction that keeps only {0, s_i, 1, inf}.
// Computed from the stable restrictions of the member partitions to that
// four-element set; the result is always one of the two interval endpoints,
// never the third boundary point of the target line.
VertexImage vertex_image(const Face& vertex, int i);

struct FaceContraction {
    Face image;    // vertex of B_{n-1}
    int collapsed; // members whose contraction lost stability
    int merged;    // surviving members identified pairwise by the contraction
};

// Push a vertex of B_n forward along the contraction forgetting mark s.
// Exactly one member is lost, either by collapsing or by merging with
// another survivor; the result is validated as a vertex of B_{n-1}.
FaceContraction contract_face(const Face& vertex, Mark s);

} // namespace modulilog
