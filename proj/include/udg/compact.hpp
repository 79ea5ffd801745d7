#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "udg/geom.hpp"
#include "udg/separation.hpp"
#include "udg/sssp.hpp"

namespace udg {

enum class Side : std::uint8_t { Left = 0, Right = 1 };

inline Side side_of(Point p) noexcept { return is_left(p) ? Side::Left : Side::Right; }

// Reached points split by level, side of the y-axis (half-open rule) and
// crossing parity N[p].
struct LevelGroups {
    using Group = std::vector<index_type>;

    std::vector<Group> levels;                                // W_i
    std::vector<std::array<std::array<Group, 2>, 2>> groups;  // [level][side][parity]
    ParityTable parity;

    std::size_t level_count() const noexcept { return levels.size(); }

    /// Empty for levels outside [0, level_count()).
    std::span<const index_type> group(std::size_t level, Side side, int parity_bit) const noexcept;
};

LevelGroups build_level_groups(const ShortestPathResult& spr, std::span<const Point> points,
                               double tau);

struct CandidateEdge {
    index_type a = kNoIndex;  // from the first group
    index_type b = kNoIndex;  // from the second group
};

/// Some a in A, b in B with |ab| <= 1. A and B lie on the same side.
std::optional<CandidateEdge> search_same_side(std::span<const Point> points,
                                              std::span<const index_type> A,
                                              std::span<const index_type> B);

/// Some a in A (left), b in B (right) with |ab| <= 1 and
/// crosses_terminal(a, b) == want_crossing. Members of B on the axis are
/// paired with A by direct scan.
std::optional<CandidateEdge> search_cross_side(std::span<const Point> points,
                                               std::span<const index_type> A,
                                               std::span<const index_type> B, bool want_crossing,
                                               double tau);

enum class Relation : std::uint8_t { SameSide, Crossing, NonCrossing };

struct GroupRef {
    int level_offset;  // 0 for level i, -1 for level i-1
    Side side;
    int parity;
};

// One candidate family: first x second at level i, closing walks of
// length 2i + extra_length.
struct CandidateFamily {
    GroupRef first;
    GroupRef second;
    Relation relation;
    int extra_length;
};

/// The candidate families in probing order: all length-2i families, then
/// all length-(2i+1) families.
std::span<const CandidateFamily> candidate_families() noexcept;

/// Indices of the families whose pair (first, second) contains the edge
/// pq, in either orientation.
std::vector<std::size_t> families_containing(const ShortestPathResult& spr,
                                             const ParityTable& parity,
                                             std::span<const Point> points, index_type p,
                                             index_type q, double tau);

struct CompactOptions {
    // The 2i < best level guard and the stop-at-first-hit rule per root.
    bool early_exit = true;
};

/// Same answer as separation_generic. Throws TerminalCovered.
SeparationAnswer separation_compact(const NormalizedInstance& inst, CompactOptions options = {});

}  // namespace udg
