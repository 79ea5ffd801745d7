#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "udg/delaunay.hpp"
#include "udg/geom.hpp"

namespace udg {

using hop_count = std::uint32_t;
inline constexpr hop_count kUnreached = std::numeric_limits<hop_count>::max();

// Hop distances and a shortest-path tree from `root` in G(P).
struct ShortestPathResult {
    index_type root = kNoIndex;
    std::vector<hop_count> dist;
    std::vector<index_type> parent;  // kNoIndex for the root and unreached points

    bool reached(index_type p) const noexcept { return dist[p] != kUnreached; }
};

struct DelaunaySsspOptions {
    bool use_hints = true;
};

/// Level-by-level growth over the Delaunay triangulation. Each round indexes
/// the previous level for nearest-neighbour queries; a Delaunay neighbour p
/// of a candidate joins the new level iff its nearest point w in the
/// previous level satisfies |pw| <= 1, with parent w. Candidates are FIFO.
ShortestPathResult sssp_delaunay(std::span<const Point> points, const Triangulation& dt,
                                 index_type root, DelaunaySsspOptions options = {});

// All edges of G(P), materialized by the quadratic pair test.
class ExplicitGraph {
public:
    std::size_t size() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
    std::span<const index_type> adjacent(index_type p) const noexcept {
        return {adjacency_.data() + offsets_[p], adjacency_.data() + offsets_[p + 1]};
    }

private:
    friend ExplicitGraph build_explicit_graph(std::span<const Point> points);

    std::vector<std::size_t> offsets_;
    std::vector<index_type> adjacency_;
};

ExplicitGraph build_explicit_graph(std::span<const Point> points);
ShortestPathResult bfs(const ExplicitGraph& graph, index_type root);
ShortestPathResult sssp_explicit_bfs(std::span<const Point> points, index_type root);

/// BFS over a fresh unit grid: a popped point scans the unvisited lists of
/// its 3x3 cell block and claims every point within distance 1.
ShortestPathResult sssp_grid(std::span<const Point> points, index_type root);

/// Reached points grouped by hop count: levels[i] = W_i.
std::vector<std::vector<index_type>> levels_of(const ShortestPathResult& spr);

/// Description of the first violated tree invariant, or nullopt. Checks
/// the parent links and that no edge of G(P) joins levels more than one
/// apart or leaves the reached set, which pins dist to the hop distance.
std::optional<std::string> tree_violation(std::span<const Point> points,
                                          const ShortestPathResult& spr);

}  // namespace udg
