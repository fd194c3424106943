#include "modulilog/sing_divisor.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace modulilog {

AlphaSets alpha_sets(const MarkedSet& host, const AVector& a) {
    if (a.n() != host.n())
        fail("precondition", "a-vector length must match the number of movable marks");
    a.ensure_finite();
    AlphaSets out;
    for (int i = 1; i <= host.n(); ++i) {
        out.movable |= MarkMask{1} << i;
        if (a.entry_is(i, 0.0)) out.zero |= MarkMask{1} << i;
        if (a.entry_is(i, 1.0)) out.one |= MarkMask{1} << i;
    }
    return out;
}

std::string to_string(AlphaType type) {
    switch (type) {
    case AlphaType::zero: return "0";
    case AlphaType::one: return "1";
    case AlphaType::infinity: return "inf";
    }
    fail("internal_consistency", "unreachable alpha type");
}

SingularLocus singular_locus(const MarkedSet& host, const AVector& a) {
    const AlphaSets cls = alpha_sets(host, a);
    SingularLocus out;

    const int pos_zero = 0;
    const int pos_one = host.n() + 1;
    const int pos_inf = host.n() + 2;

    // every part {alpha} union T with T a non-empty subset of `pool`;
    // stability is automatic since the complementary side keeps the other
    // two special labels
    auto emit = [&](int alpha_pos, MarkMask pool, AlphaType type) {
        for (MarkMask t = pool; t != 0; t = (t - 1) & pool) {
            const MarkMask side = (MarkMask{1} << alpha_pos) | t;
            out.boundary.push_back(BoundaryComponent{StablePartition(host, side), type});
        }
    };

    emit(pos_zero, cls.zero, AlphaType::zero);
    emit(pos_one, cls.one, AlphaType::one);
    emit(pos_inf, cls.movable, AlphaType::infinity);

    // a partition can carry at most one type over this marked set; sizes
    // would otherwise exceed |S|
    std::sort(out.boundary.begin(), out.boundary.end(),
              [](const BoundaryComponent& x, const BoundaryComponent& y) {
                  if (x.partition != y.partition) return x.partition < y.partition;
                  return x.type < y.type;
              });
    for (std::size_t i = 0; i + 1 < out.boundary.size(); ++i)
        if (out.boundary[i].partition == out.boundary[i + 1].partition)
            fail("internal_consistency", "singular boundary component listed twice");

    const int expected = (1 << std::popcount(cls.zero)) - 1 + (1 << std::popcount(cls.one)) - 1 +
                         (1 << host.n()) - 1;
    if (static_cast<int>(out.boundary.size()) != expected)
        fail("internal_consistency", "typed boundary enumeration lost a stable instance");

    for (int i = 1; i <= host.n(); ++i)
        if (!(cls.zero_or_one() >> i & 1))
            out.nonboundary.push_back(NonBoundaryComponent{i, a.at(i)});

    return out;
}

std::optional<FiberProduct> classify_fiber_intersection(const MarkedSet& host, int i,
                                                        std::complex<double> value,
                                                        const StablePartition& sigma) {
    if (i < 1 || i > host.n()) fail("precondition", "mark index out of range");
    if (sigma.host() != host) fail("host_mismatch", "partition over a different marked set");
    if (value == std::complex<double>(0.0) || value == std::complex<double>(1.0))
        fail("precondition", "fiber value must avoid 0 and 1");

    const MarkMask four = MarkMask{1} | (MarkMask{1} << i) | (MarkMask{1} << (host.n() + 1)) |
                          (MarkMask{1} << (host.n() + 2));
    const MarkMask part = sigma.part();
    const MarkMask co = sigma.co_part();
    const int in_part = std::popcount(part & four);
    if (in_part == 2) return std::nullopt; // stable restriction: fiber misses the divisor

    const MarkMask big = in_part >= 3 ? part : co;
    const MarkMask small = in_part >= 3 ? co : part;
    Mark attach = Mark::zero();
    if (std::popcount(big & four) == 4) {
        // whole four-set inside: adjoin the least mark of the other part
        attach = host.at(std::countr_zero(small));
    } else {
        attach = host.at(std::countr_zero(four & ~big));
    }
    return FiberProduct{big, attach};
}

AvoidanceReport check_avoidance(int n, const AVector& a) {
    const MarkedSet host(n);
    AvoidanceReport report;
    report.n = n;
    report.a = a;
    report.flags_ok = a.flags_ok();
    report.locus = singular_locus(host, a);

    std::unordered_map<MarkMask, const BoundaryComponent*> bad;
    for (const auto& b : report.locus.boundary) bad.emplace(b.partition.part(), &b);

    std::vector<Face> top;
    for (int k = 1; k <= n; ++k) {
        auto layer = faces(n, k);
        for (const Face& face : layer) {
            ++report.faces_checked;
            for (const auto& member : face.family().members()) {
                auto it = bad.find(member.part());
                if (it != bad.end())
                    report.violations.push_back(
                        AvoidanceViolation{face, *it->second, std::nullopt});
            }
        }
        if (k == n) top = std::move(layer);
    }

    // fiber components can only swallow whole faces through their vertices,
    // and vertex images sit in {0,1} while fiber values avoid {0,1}
    for (const Face& vertex : top) {
        for (const auto& nb : report.locus.nonboundary) {
            const VertexImage image = vertex_image(vertex, nb.index);
            const std::complex<double> image_value =
                image == VertexImage::zero_point ? 0.0 : 1.0;
            if (std::abs(image_value - nb.value) <= a.match_eps)
                report.violations.push_back(AvoidanceViolation{vertex, std::nullopt, nb});
        }
    }
    return report;
}

} // namespace modulilog
