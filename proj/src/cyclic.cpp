#include "modulilog/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace modulilog {

std::string Mark::name() const {
    switch (kind_) {
    case Kind::zero: return "0";
    case Kind::one: return "1";
    case Kind::infinity: return "inf";
    case Kind::movable: return "s" + std::to_string(index_);
    }
    fail("internal_consistency", "unreachable mark kind");
}

Mark Mark::parse(std::string_view text) {
    if (text == "0") return zero();
    if (text == "1") return one();
    if (text == "inf" || text == "infinity" || text == "oo") return infinity();
    if (text.size() >= 2 && text[0] == 's') {
        int i = 0;
        auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), i);
        if (ec == std::errc{} && ptr == text.data() + text.size() && i >= 1)
            return s(i);
    }
    fail("precondition", "unrecognized mark name '" + std::string(text) + "'");
}

MarkedSet::MarkedSet(int n) : n_(n) {
    if (n < 1 || n > 24)
        fail("precondition", "marked set requires 1 <= n <= 24, got " + std::to_string(n));
}

int MarkedSet::position(Mark m) const {
    switch (m.kind()) {
    case Mark::Kind::zero: return 0;
    case Mark::Kind::one: return n_ + 1;
    case Mark::Kind::infinity: return n_ + 2;
    case Mark::Kind::movable:
        if (m.index() >= 1 && m.index() <= n_) return m.index();
        fail("precondition", "mark " + m.name() + " is not a label of this marked set");
    }
    fail("internal_consistency", "unreachable mark kind");
}

Mark MarkedSet::at(int position) const {
    if (position == 0) return Mark::zero();
    if (position >= 1 && position <= n_) return Mark::s(position);
    if (position == n_ + 1) return Mark::one();
    if (position == n_ + 2) return Mark::infinity();
    fail("precondition", "position out of range");
}

bool MarkedSet::contains(Mark m) const {
    return m.kind() != Mark::Kind::movable || (m.index() >= 1 && m.index() <= n_);
}

std::vector<Mark> MarkedSet::marks_of(MarkMask mask) const {
    std::vector<Mark> out;
    for (int p = 0; p < size(); ++p)
        if (mask >> p & 1) out.push_back(at(p));
    return out;
}

std::string MarkedSet::mask_to_string(MarkMask mask) const {
    std::string out = "{";
    bool first = true;
    for (Mark m : marks_of(mask)) {
        if (!first) out += ",";
        out += m.name();
        first = false;
    }
    return out + "}";
}

StablePartition::StablePartition(MarkedSet host, MarkMask side) : host_(host) {
    const MarkMask full = host_.full_mask();
    if (side & ~full)
        fail("precondition", "partition mask has bits outside the marked set");
    part_ = (side & host_.infinity_bit()) ? (full & ~side) : side;
    const int sz = std::popcount(part_);
    if (sz < 2 || sz > host_.size() - 2)
        fail("precondition", "partition is not stable: part " + host_.mask_to_string(part_) +
                                 " leaves a side of size < 2");
}

StablePartition StablePartition::from_marks(MarkedSet host, std::span<const Mark> part) {
    MarkMask mask = 0;
    for (Mark m : part) mask |= MarkMask{1} << host.position(m);
    if (std::popcount(mask) != static_cast<int>(part.size()))
        fail("duplicate_member", "repeated mark in partition part");
    return StablePartition(host, mask);
}

int StablePartition::part_size() const { return std::popcount(part_); }

bool StablePartition::part_contains(Mark m) const {
    return part_ >> host_.position(m) & 1;
}

std::string StablePartition::to_string() const {
    return host_.mask_to_string(part_) + "|" + host_.mask_to_string(co_part());
}

int intersection_count(const StablePartition& sigma, const StablePartition& tau) {
    if (sigma.host() != tau.host())
        fail("host_mismatch", "partitions live over different marked sets");
    const MarkMask s1 = sigma.part(), s2 = sigma.co_part();
    const MarkMask t1 = tau.part(), t2 = tau.co_part();
    return int((s1 & t1) != 0) + int((s1 & t2) != 0) + int((s2 & t1) != 0) + int((s2 & t2) != 0);
}

bool divisors_intersect(const StablePartition& sigma, const StablePartition& tau) {
    return intersection_count(sigma, tau) <= 3;
}

bool is_good_family(std::span<const StablePartition> family) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (family[i] == family[j])
                fail("duplicate_member", "good-family test needs pairwise distinct partitions");
            if (intersection_count(family[i], family[j]) != 3) return false;
        }
    return true;
}

bool is_strictly_ordered(const StablePartition& sigma) {
    const int size = sigma.host().size();
    const MarkMask part = sigma.part();
    int transitions = 0;
    for (int p = 0; p < size; ++p) {
        const bool here = part >> p & 1;
        const bool next = part >> ((p + 1) % size) & 1;
        transitions += here != next;
    }
    // a proper non-empty subset is a cyclic interval iff the walk around the
    // circle enters and leaves it exactly once
    return transitions == 2;
}

std::optional<StablePartition> contract_partition(const StablePartition& sigma, Mark s) {
    const MarkedSet& host = sigma.host();
    if (!s.movable() || !host.contains(s))
        fail("precondition", "contraction mark must be one of s_1..s_n of the host set");
    if (host.n() < 2)
        fail("precondition", "contraction target would have no movable marks");

    const int pos = host.position(s);
    const MarkMask part = sigma.part();
    const bool in_part = part >> pos & 1;
    const int part_sz = sigma.part_size() - (in_part ? 1 : 0);
    const int co_sz = host.size() - sigma.part_size() - (in_part ? 0 : 1);
    if (part_sz < 2 || co_sz < 2) return std::nullopt; // the shrunken part collapses

    const MarkMask low = part & ((MarkMask{1} << pos) - 1);
    const MarkMask high = (part >> (pos + 1)) << pos;
    return StablePartition(MarkedSet(host.n() - 1), low | high);
}

GoodFamily::GoodFamily(MarkedSet host, std::vector<StablePartition> members)
    : host_(host), members_(std::move(members)) {
    for (const auto& m : members_)
        if (m.host() != host_)
            fail("host_mismatch", "family member over a different marked set");
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i + 1 < members_.size(); ++i)
        if (members_[i] == members_[i + 1])
            fail("duplicate_member", "family members must be distinct");
    if (static_cast<int>(members_.size()) > host_.n())
        fail("precondition", "family exceeds the ambient dimension " + std::to_string(host_.n()));
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j)
            if (intersection_count(members_[i], members_[j]) != 3)
                fail("precondition", "family is not good: " + members_[i].to_string() + " and " +
                                         members_[j].to_string() + " do not meet");
}

} // namespace modulilog
