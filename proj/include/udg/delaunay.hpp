#pragma once

#include <span>
#include <vector>

#include "udg/geom.hpp"

namespace udg {

// Delaunay triangulation stored as per-vertex adjacency (CSR) plus the raw
// triangle list. Built once per point set and shared across roots.
class Triangulation {
public:
    Triangulation() = default;

    std::size_t size() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

    // Unchecked adjacency; see udg::neighbors for the checked version.
    std::span<const index_type> adjacent(index_type p) const noexcept {
        return {adjacency_.data() + offsets_[p], adjacency_.data() + offsets_[p + 1]};
    }

    // Flat vertex triples, all clockwise (y up). Empty for collinear input.
    std::span<const index_type> triangles() const noexcept { return triangles_; }

private:
    friend Triangulation build_delaunay(std::span<const Point> points);

    std::vector<std::size_t> offsets_;
    std::vector<index_type> adjacency_;
    std::vector<index_type> triangles_;
};

/// Sweep-hull construction with Lawson flips. Collinear input yields the
/// path along the line; n <= 2 yields the trivial adjacency.
/// Throws DuplicatePoints.
Triangulation build_delaunay(std::span<const Point> points);

/// Checked adjacency lookup. Throws IndexOutOfRange.
std::span<const index_type> neighbors(const Triangulation& dt, index_type p);

}  // namespace udg
