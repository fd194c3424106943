#include "modulilog/stasheff.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace modulilog {

Face::Face(GoodFamily family) : family_(std::move(family)) {
    if (family_.size() < 1)
        fail("precondition", "a face needs at least one member partition");
    for (const auto& member : family_.members())
        if (!is_strictly_ordered(member))
            fail("precondition",
                 "face member " + member.to_string() + " is not strictly ordered");
}

std::string Face::to_string() const {
    std::string out = "[";
    bool first = true;
    for (const auto& m : family_.members()) {
        if (!first) out += " ";
        out += m.to_string();
        first = false;
    }
    return out + "]";
}

std::vector<StablePartition> facets(int n) {
    const MarkedSet host(n);
    const int size = host.size();
    std::set<StablePartition> seen;
    // every way of breaking the circle of marks into two arcs, each arc of
    // length 2..size-2; arc and complementary arc give the same partition
    for (int start = 0; start < size; ++start) {
        for (int len = 2; len <= size - 2; ++len) {
            MarkMask mask = 0;
            for (int off = 0; off < len; ++off)
                mask |= MarkMask{1} << ((start + off) % size);
            seen.insert(StablePartition(host, mask));
        }
    }
    std::vector<StablePartition> out(seen.begin(), seen.end());
    if (static_cast<int>(out.size()) != n * (n + 3) / 2)
        fail("internal_consistency", "facet count deviates from n(n+3)/2");
    return out;
}

namespace {

void enumerate_families(const std::vector<StablePartition>& fs,
                        const std::vector<std::uint64_t>& compat, int k,
                        const MarkedSet& host, std::vector<Face>& out) {
    const int count = static_cast<int>(fs.size());
    std::vector<int> chosen;
    chosen.reserve(k);

    auto recurse = [&](auto&& self, int next, std::uint64_t allowed) -> void {
        if (static_cast<int>(chosen.size()) == k) {
            std::vector<StablePartition> members;
            members.reserve(k);
            for (int idx : chosen) members.push_back(fs[idx]);
            out.emplace_back(GoodFamily(host, std::move(members)));
            return;
        }
        const int need = k - static_cast<int>(chosen.size());
        for (int idx = next; idx + need <= count; ++idx) {
            if (!(allowed >> idx & 1)) continue;
            chosen.push_back(idx);
            self(self, idx + 1, allowed & compat[idx]);
            chosen.pop_back();
        }
    };

    const std::uint64_t all = count == 64 ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << count) - 1;
    recurse(recurse, 0, all);
}

} // namespace

std::vector<Face> faces(int n, int k) {
    const MarkedSet host(n);
    if (k < 1 || k > n)
        fail("precondition", "face codimension must satisfy 1 <= k <= n");
    const auto fs = facets(n);
    const int count = static_cast<int>(fs.size());
    if (count > 64)
        fail("precondition", "face enumeration supports at most 64 facets (n <= 9)");

    std::vector<std::uint64_t> compat(count, 0);
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (intersection_count(fs[i], fs[j]) == 3) {
                compat[i] |= std::uint64_t{1} << j;
                compat[j] |= std::uint64_t{1} << i;
            }

    std::vector<Face> out;
    enumerate_families(fs, compat, k, host, out);
    return out;
}

std::vector<Face> vertices(int n) { return faces(n, n); }

std::string to_string(VertexImage image) {
    return image == VertexImage::zero_point ? "0" : "1";
}

VertexImage vertex_image(const Face& vertex, int i) {
    if (!vertex.is_vertex())
        fail("precondition", "vertex_image requires a face of codimension n");
    const MarkedSet& host = vertex.host();
    if (i < 1 || i > host.n())
        fail("precondition", "mark index out of range");

    const int pos_one = host.n() + 1;
    bool found = false;
    VertexImage image{};
    for (const auto& member : vertex.family().members()) {
        const MarkMask part = member.part(); // never contains inf
        const bool has0 = part & 1;
        const bool hasi = part >> i & 1;
        const bool has1 = part >> pos_one & 1;
        if (int(has0) + int(hasi) + int(has1) != 2) continue; // restriction not stable
        VertexImage here;
        if (has0 && hasi) {
            here = VertexImage::zero_point; // induced {0,s_i}|{1,inf}
        } else if (hasi && has1) {
            here = VertexImage::one_point; // induced {s_i,1}|{0,inf}
        } else {
            // induced {0,1}|{s_i,inf} would put the image at the third
            // boundary point, which never happens for genuine vertices
            fail("internal_consistency",
                 "member " + member.to_string() + " restricts to the forbidden {s_i,inf}|{0,1}");
        }
        if (found && here != image)
            fail("internal_consistency", "stable restrictions disagree on the vertex image");
        found = true;
        image = here;
    }
    if (!found)
        fail("interior_image",
             "no member restricts stably to {0,s" + std::to_string(i) + ",1,inf}");
    return image;
}

FaceContraction contract_face(const Face& vertex, Mark s) {
    if (!vertex.is_vertex())
        fail("precondition", "contract_face requires a vertex");
    const int n = vertex.host().n();
    if (n < 2)
        fail("precondition", "contraction target would have no movable marks");

    std::vector<StablePartition> survivors;
    survivors.reserve(n);
    int collapsed = 0;
    for (const auto& member : vertex.family().members()) {
        if (auto contracted = contract_partition(member, s))
            survivors.push_back(*contracted);
        else
            ++collapsed;
    }
    if (collapsed >= 2)
        fail("internal_consistency",
             "contraction collapsed " + std::to_string(collapsed) + " members of a vertex");

    std::sort(survivors.begin(), survivors.end());
    const auto before = survivors.size();
    survivors.erase(std::unique(survivors.begin(), survivors.end()), survivors.end());
    const int merged = static_cast<int>(before - survivors.size());

    try {
        Face image{GoodFamily(MarkedSet(n - 1), std::move(survivors))};
        if (!image.is_vertex())
            fail("internal_consistency", "contracted family is not a vertex of the target");
        return FaceContraction{std::move(image), collapsed, merged};
    } catch (const Error& e) {
        if (e.code() == "internal_consistency") throw;
        fail("internal_consistency", std::string("contracted family invalid: ") + e.what());
    }
}

} // namespace modulilog
