#pragma once

#include <optional>
#include <span>
#include <vector>

#include "udg/geom.hpp"

namespace udg {

struct Neighbor {
    Point point;
    index_type id = kNoIndex;
    double dist_sq = 0.0;
};

// Static k-d tree over a point subset. Each entry carries the caller's id
// (usually the index into the full PointSet).
//
// nearest() returns the lexicographic minimum of (dist_sq, id), so the
// answer is unique for a fixed point set and never depends on the hint.
class NNIndex {
public:
    struct Entry {
        Point point;
        index_type id = kNoIndex;
    };

    /// Throws EmptySet if `entries` is empty.
    explicit NNIndex(std::vector<Entry> entries);

    /// Indexes points[ids[k]] under id ids[k].
    static NNIndex over(std::span<const Point> points, std::span<const index_type> ids);

    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const Entry> entries() const noexcept { return entries_; }

    /// The hint only seeds the search bound from the leaf containing it.
    Neighbor nearest(Point p, std::optional<Point> hint = std::nullopt) const;

    /// Some entry within distance 1 of p, or nullopt. Stops at the first hit.
    std::optional<Neighbor> any_within_unit(Point p) const;

private:
    struct Node {
        double min_x, min_y, max_x, max_y;
        std::uint32_t begin, end;
        std::int32_t left = -1, right = -1;
        std::uint8_t axis = 0;
        double split = 0.0;

        bool leaf() const noexcept { return left < 0; }
        double box_dist_sq(Point p) const noexcept;
    };

    std::int32_t build(std::uint32_t begin, std::uint32_t end);

    std::vector<Entry> entries_;
    std::vector<Node> nodes_;
};

inline NNIndex build_nn(std::span<const Point> points, std::span<const index_type> ids) {
    return NNIndex::over(points, ids);
}

}  // namespace udg
