#pragma once

#include <optional>
#include <span>
#include <vector>

#include "udg/geom.hpp"
#include "udg/neighbor.hpp"

namespace udg {

// Slopes of the lines through p and the two terminals. For a left point a
// and a right point b, segment ab crosses the open segment st iff
//   phi1(a) < phi1(b)  and  phi2(a) > phi2(b),
// which is exactly the comparison crosses_terminal performs.
struct PhiImage {
    double phi1 = 0.0;
    double phi2 = 0.0;
    Point original;
};

/// Throws OnAxis if p.x == 0.
PhiImage phi(Point p, double tau);

// Two-level range tree over phi-images of right-side points (x > 0). Every
// secondary node owns a nearest-neighbour structure over the original
// points of its canonical subset; small subsets are scanned directly.
//
// Crossing queries take the open quadrant {phi1 > phi1(a), phi2 < phi2(a)};
// non-crossing queries take its exact complement, split into
// {phi1 <= phi1(a)} and {phi1 > phi1(a), phi2 >= phi2(a)}.
class DualIndex {
public:
    using Entry = NNIndex::Entry;

    DualIndex() = default;

    /// Throws OnAxis if some point has x <= 0.
    DualIndex(std::vector<Entry> right_points, double tau);

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    double tau() const noexcept { return tau_; }

    /// A b with |ab| <= 1 whose segment ab crosses st. Throws WrongSide if a.x >= 0.
    std::optional<Neighbor> query_crossing(Point a) const;

    /// A b with |ab| <= 1 whose segment ab misses st. Throws WrongSide if a.x >= 0.
    std::optional<Neighbor> query_noncrossing(Point a) const;

    /// Ids of every canonical subset (one list per secondary node).
    std::vector<std::vector<index_type>> canonical_subsets() const;

    /// Canonical subsets whose union answers the quadrant query for a.
    std::vector<std::vector<index_type>> crossing_decomposition(Point a) const;

private:
    struct PrimaryNode {
        std::uint32_t lo, hi;          // range in phi1 order
        std::int32_t left = -1, right = -1;
        std::uint32_t secondary_root;  // index into secondary_
    };
    struct SecondaryNode {
        std::uint32_t lo, hi;          // absolute range in by_phi2_
        std::int32_t left = -1, right = -1;
        std::int32_t nn = -1;          // index into nn_, -1 for direct scan
    };

    std::int32_t build_primary(std::uint32_t lo, std::uint32_t hi);
    std::int32_t build_secondary(std::uint32_t lo, std::uint32_t hi);

    // Visit canonical secondary nodes for primary range [plo, phi) and
    // phi2 constraint; `below` selects phi2 < bound, otherwise phi2 >= bound.
    template <class Visit>
    bool visit_range(std::uint32_t plo, std::uint32_t phi, double bound, bool below,
                     bool any_phi2, Visit&& visit) const;

    std::optional<Neighbor> probe(const SecondaryNode& node, Point a) const;
    void check_left(Point a) const;

    double tau_ = 0.0;
    std::vector<Entry> entries_;           // sorted by (phi1, phi2, id)
    std::vector<double> phi1_;             // phi1 of entries_
    std::vector<double> entry_phi2_;       // phi2 of entries_
    std::vector<PrimaryNode> primary_;
    std::vector<SecondaryNode> secondary_;
    std::vector<Entry> by_phi2_;           // per primary node, its entries sorted by (phi2, id)
    std::vector<double> phi2_;             // phi2 of by_phi2_
    std::vector<NNIndex> nn_;
};

inline DualIndex build_dual_index(std::vector<NNIndex::Entry> right_points, double tau) {
    return DualIndex(std::move(right_points), tau);
}

}  // namespace udg
