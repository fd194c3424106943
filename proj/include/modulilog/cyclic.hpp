#pragma once

// Cyclically ordered marked sets {0, s_1, ..., s_n, 1, inf}, their stable
// 2-partitions, and the combinatorics of the corresponding boundary divisors:
// pairwise intersection counts, good (pairwise compatible) families, strictly
// ordered partitions (arcs of the circle of marks), and contraction under
// forgetting a movable mark.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modulilog/errors.hpp"

namespace modulilog {

class Mark {
public:
    enum class Kind : std::uint8_t { zero, movable, one, infinity };

    static constexpr Mark zero() { return Mark(Kind::zero, 0); }
    static constexpr Mark s(int i) { return Mark(Kind::movable, i); }
    static constexpr Mark one() { return Mark(Kind::one, 0); }
    static constexpr Mark infinity() { return Mark(Kind::infinity, 0); }

    constexpr Kind kind() const { return kind_; }
    constexpr int index() const { return index_; } // movable marks only, 1-based
    constexpr bool movable() const { return kind_ == Kind::movable; }

    std::string name() const;
    static Mark parse(std::string_view text);

    friend constexpr auto operator<=>(const Mark&, const Mark&) = default;

private:
    constexpr Mark(Kind k, int i) : kind_(k), index_(i) {}

    Kind kind_;
    int index_;
};

// Subsets of a marked set are bitmasks over the cyclic positions
//   0 -> "0", 1..n -> s_1..s_n, n+1 -> "1", n+2 -> "inf".
using MarkMask = std::uint32_t;

// The label set S = {0, s_1, ..., s_n, 1, inf} carrying the fixed cyclic
// order 0 < s_1 < ... < s_n < 1 < inf < 0.
class MarkedSet {
public:
    explicit MarkedSet(int n);

    int n() const { return n_; }
    int size() const { return n_ + 3; }

    int position(Mark m) const;      // throws if m is not a label of this set
    Mark at(int position) const;
    bool contains(Mark m) const;

    MarkMask full_mask() const { return (MarkMask{1} << size()) - 1; }
    MarkMask infinity_bit() const { return MarkMask{1} << (n_ + 2); }

    std::vector<Mark> marks_of(MarkMask mask) const;
    std::string mask_to_string(MarkMask mask) const;

    friend bool operator==(const MarkedSet&, const MarkedSet&) = default;

private:
    int n_;
};

// An unordered 2-partition of a marked set with both parts of size >= 2.
// Canonical form stores the part that does not contain inf, so value equality
// coincides with equality of unordered partitions.
class StablePartition {
public:
    // `side` may be either part; it is canonicalized on construction.
    StablePartition(MarkedSet host, MarkMask side);
    static StablePartition from_marks(MarkedSet host, std::span<const Mark> part);

    const MarkedSet& host() const { return host_; }
    MarkMask part() const { return part_; }                        // inf-free side
    MarkMask co_part() const { return host_.full_mask() & ~part_; } // side with inf
    int part_size() const;
    bool part_contains(Mark m) const;
    std::vector<Mark> part_marks() const { return host_.marks_of(part_); }

    std::string to_string() const;

    friend bool operator==(const StablePartition& a, const StablePartition& b) {
        return a.host_ == b.host_ && a.part_ == b.part_;
    }
    friend std::strong_ordering operator<=>(const StablePartition& a, const StablePartition& b) {
        if (auto c = a.host_.n() <=> b.host_.n(); c != 0) return c;
        return a.part_ <=> b.part_;
    }

private:
    MarkedSet host_;
    MarkMask part_;
};

// Number of non-empty intersections among the four ordered part pairs of two
// partitions over the same marked set. Always 2, 3 or 4; equals 2 exactly for
// equal partitions, and the divisors meet iff the count is at most 3.
int intersection_count(const StablePartition& sigma, const StablePartition& tau);

bool divisors_intersect(const StablePartition& sigma, const StablePartition& tau);

// True iff every distinct pair in the family has intersection count 3, which
// is equivalent to the corresponding boundary divisors having a non-empty
// common intersection. Members must be pairwise distinct.
bool is_good_family(std::span<const StablePartition> family);

// True iff one part (equivalently both) is a run of consecutive labels in the
// cyclic order, i.e. the partition cuts the circle of marks into two arcs.
bool is_strictly_ordered(const StablePartition& sigma);

// Remove a movable mark from its part. Returns nullopt when the shrunken part
// drops below size 2, in which case the divisor collapses onto the whole
// target space; otherwise the contracted partition over the (n-1)-mark set,
// with the remaining movable marks renumbered to close the gap.
std::optional<StablePartition> contract_partition(const StablePartition& sigma, Mark s);

// A set of pairwise compatible stable partitions over one marked set; the
// combinatorial avatar of a non-empty intersection of boundary divisors.
// Members are kept sorted; size never exceeds the ambient dimension n.
class GoodFamily {
public:
    GoodFamily(MarkedSet host, std::vector<StablePartition> members);

    const MarkedSet& host() const { return host_; }
    std::span<const StablePartition> members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }

    friend bool operator==(const GoodFamily&, const GoodFamily&) = default;

private:
    MarkedSet host_;
    std::vector<StablePartition> members_;
};

} // namespace modulilog
