#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "udg/geom.hpp"

namespace udg {

// Unit cell (floor(x), floor(y)). Any edge of G(P) joins points in the
// same or in 8-adjacent cells.
struct CellKey {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const CellKey&, const CellKey&) = default;
};

inline CellKey cell_of(Point p) noexcept {
    return {static_cast<std::int64_t>(std::floor(p.x)), static_cast<std::int64_t>(std::floor(p.y))};
}

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(k.y) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

using CellMap = std::unordered_map<CellKey, std::vector<index_type>, CellKeyHash>;

CellMap bucket_points(std::span<const Point> points);

// Read-only buckets; used to enumerate the edges of G(P).
class UnitGrid {
public:
    explicit UnitGrid(std::span<const Point> points) : points_(points), cells_(bucket_points(points)) {}

    /// Calls f(q) for every q with dist_sq(points[p], points[q]) <= 1, q != p.
    template <class F>
    void for_each_neighbor(index_type p, F&& f) const {
        const Point pp = points_[p];
        const CellKey c = cell_of(pp);
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const auto it = cells_.find({c.x + dx, c.y + dy});
                if (it == cells_.end()) continue;
                for (const index_type q : it->second) {
                    if (q != p && within_unit(pp, points_[q])) {
                        f(q);
                    }
                }
            }
        }
    }

    /// Calls f(p, q) once per edge of G(P), with p < q.
    template <class F>
    void for_each_edge(F&& f) const {
        const auto n = static_cast<index_type>(points_.size());
        for (index_type p = 0; p < n; ++p) {
            for_each_neighbor(p, [&](index_type q) {
                if (p < q) f(p, q);
            });
        }
    }

    const CellMap& cells() const noexcept { return cells_; }

private:
    std::span<const Point> points_;
    CellMap cells_;
};

}  // namespace udg
