#include "udg/dual_index.hpp"

#include <algorithm>
#include <numeric>

namespace udg {
namespace {

// Nodes at or below this size are leaves and are scanned directly.
constexpr std::uint32_t kScanLimit = 12;

std::optional<Neighbor> scan_unit(std::span<const NNIndex::Entry> piece, Point a) {
    for (const auto& e : piece) {
        const double d = dist_sq(a, e.point);
        if (d <= 1.0) {
            return Neighbor{e.point, e.id, d};
        }
    }
    return std::nullopt;
}

}  // namespace

PhiImage phi(Point p, double tau) {
    if (p.x == 0.0) {
        throw Error(ErrorCode::OnAxis, "phi is undefined on the y-axis");
    }
    return {slope_to_s(p), slope_to_t(p, tau), p};
}

DualIndex::DualIndex(std::vector<Entry> right_points, double tau)
    : tau_(tau), entries_(std::move(right_points)) {
    for (const Entry& e : entries_) {
        if (!(e.point.x > 0.0)) {
            throw Error(ErrorCode::OnAxis, "dual index accepts only points with x > 0");
        }
    }
    if (entries_.empty()) {
        return;
    }
    const auto m = static_cast<std::uint32_t>(entries_.size());

    std::vector<PhiImage> images(m);
    for (std::uint32_t k = 0; k < m; ++k) {
        images[k] = phi(entries_[k].point, tau_);
    }
    std::vector<std::uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const PhiImage& ia = images[a];
        const PhiImage& ib = images[b];
        if (ia.phi1 != ib.phi1) return ia.phi1 < ib.phi1;
        if (ia.phi2 != ib.phi2) return ia.phi2 < ib.phi2;
        return entries_[a].id < entries_[b].id;
    });
    std::vector<Entry> sorted(m);
    phi1_.resize(m);
    entry_phi2_.resize(m);
    for (std::uint32_t k = 0; k < m; ++k) {
        sorted[k] = entries_[order[k]];
        phi1_[k] = images[order[k]].phi1;
        entry_phi2_[k] = images[order[k]].phi2;
    }
    entries_ = std::move(sorted);

    build_primary(0, m);
}

std::int32_t DualIndex::build_primary(std::uint32_t lo, std::uint32_t hi) {
    const auto self = static_cast<std::int32_t>(primary_.size());
    primary_.push_back({lo, hi, -1, -1, 0});

    std::int32_t left = -1, right = -1;
    if (hi - lo > kScanLimit) {
        const std::uint32_t mid = lo + (hi - lo) / 2;
        left = build_primary(lo, mid);
        right = build_primary(mid, hi);
    }

    // This node's entries in (phi2, id) order.
    const auto offset = static_cast<std::uint32_t>(by_phi2_.size());
    std::vector<std::uint32_t> order(hi - lo);
    std::iota(order.begin(), order.end(), lo);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return entry_phi2_[a] < entry_phi2_[b] ||
               (entry_phi2_[a] == entry_phi2_[b] && entries_[a].id < entries_[b].id);
    });
    for (const std::uint32_t k : order) {
        by_phi2_.push_back(entries_[k]);
        phi2_.push_back(entry_phi2_[k]);
    }
    const std::int32_t sec = build_secondary(offset, offset + (hi - lo));

    primary_[self].left = left;
    primary_[self].right = right;
    primary_[self].secondary_root = static_cast<std::uint32_t>(sec);
    return self;
}

std::int32_t DualIndex::build_secondary(std::uint32_t lo, std::uint32_t hi) {
    const auto self = static_cast<std::int32_t>(secondary_.size());
    secondary_.push_back({lo, hi, -1, -1, -1});
    if (hi - lo <= kScanLimit) {
        return self;
    }
    std::vector<Entry> subset(by_phi2_.begin() + lo, by_phi2_.begin() + hi);
    secondary_[self].nn = static_cast<std::int32_t>(nn_.size());
    nn_.emplace_back(std::move(subset));

    const std::uint32_t mid = lo + (hi - lo) / 2;
    const std::int32_t left = build_secondary(lo, mid);
    const std::int32_t right = build_secondary(mid, hi);
    secondary_[self].left = left;
    secondary_[self].right = right;
    return self;
}

template <class Visit>
bool DualIndex::visit_range(std::uint32_t plo, std::uint32_t phi_hi, double bound, bool below,
                            bool any_phi2, Visit&& visit) const {
    auto phi2_ok = [&](double v) { return any_phi2 || (below ? v < bound : v >= bound); };

    auto secondary = [&](auto& self, std::int32_t v, std::uint32_t qlo, std::uint32_t qhi) -> bool {
        const SecondaryNode& node = secondary_[v];
        if (qhi <= node.lo || node.hi <= qlo) return false;
        if (qlo <= node.lo && node.hi <= qhi) {
            return visit(&node, std::span<const Entry>(by_phi2_.data() + node.lo, node.hi - node.lo));
        }
        if (node.left < 0) {
            const std::uint32_t a = std::max(qlo, node.lo);
            const std::uint32_t b = std::min(qhi, node.hi);
            return visit(nullptr, std::span<const Entry>(by_phi2_.data() + a, b - a));
        }
        return self(self, node.left, qlo, qhi) || self(self, node.right, qlo, qhi);
    };

    auto primary = [&](auto& self, std::int32_t v) -> bool {
        const PrimaryNode& node = primary_[v];
        if (phi_hi <= node.lo || node.hi <= plo) return false;
        if (plo <= node.lo && node.hi <= phi_hi) {
            const SecondaryNode& root = secondary_[node.secondary_root];
            std::uint32_t qlo = root.lo, qhi = root.hi;
            if (!any_phi2) {
                const auto first = phi2_.begin() + root.lo;
                const auto last = phi2_.begin() + root.hi;
                const auto split =
                    static_cast<std::uint32_t>(std::lower_bound(first, last, bound) - phi2_.begin());
                if (below) qhi = split;
                else qlo = split;
            }
            if (qlo >= qhi) return false;
            return secondary(secondary, static_cast<std::int32_t>(node.secondary_root), qlo, qhi);
        }
        if (node.left < 0) {
            const std::uint32_t a = std::max(plo, node.lo);
            const std::uint32_t b = std::min(phi_hi, node.hi);
            for (std::uint32_t k = a; k < b; ++k) {
                if (phi2_ok(entry_phi2_[k]) &&
                    visit(nullptr, std::span<const Entry>(entries_.data() + k, 1))) {
                    return true;
                }
            }
            return false;
        }
        return self(self, node.left) || self(self, node.right);
    };

    if (entries_.empty() || plo >= phi_hi) return false;
    return primary(primary, 0);
}

std::optional<Neighbor> DualIndex::probe(const SecondaryNode& node, Point a) const {
    if (node.nn >= 0) {
        return nn_[node.nn].any_within_unit(a);
    }
    return scan_unit(std::span<const Entry>(by_phi2_.data() + node.lo, node.hi - node.lo), a);
}

void DualIndex::check_left(Point a) const {
    if (!(a.x < 0.0)) {
        throw Error(ErrorCode::WrongSide, "dual index queries need a point with x < 0");
    }
}

std::optional<Neighbor> DualIndex::query_crossing(Point a) const {
    check_left(a);
    std::optional<Neighbor> hit;
    const PhiImage pa = phi(a, tau_);
    const auto split = static_cast<std::uint32_t>(
        std::upper_bound(phi1_.begin(), phi1_.end(), pa.phi1) - phi1_.begin());
    auto visit = [&](const SecondaryNode* node, std::span<const Entry> piece) {
        hit = node ? probe(*node, a) : scan_unit(piece, a);
        return hit.has_value();
    };
    visit_range(split, static_cast<std::uint32_t>(entries_.size()), pa.phi2, true, false, visit);
    return hit;
}

std::optional<Neighbor> DualIndex::query_noncrossing(Point a) const {
    check_left(a);
    std::optional<Neighbor> hit;
    const PhiImage pa = phi(a, tau_);
    const auto split = static_cast<std::uint32_t>(
        std::upper_bound(phi1_.begin(), phi1_.end(), pa.phi1) - phi1_.begin());
    auto visit = [&](const SecondaryNode* node, std::span<const Entry> piece) {
        hit = node ? probe(*node, a) : scan_unit(piece, a);
        return hit.has_value();
    };
    if (visit_range(0, split, 0.0, false, true, visit)) {
        return hit;
    }
    visit_range(split, static_cast<std::uint32_t>(entries_.size()), pa.phi2, false, false, visit);
    return hit;
}

std::vector<std::vector<index_type>> DualIndex::canonical_subsets() const {
    std::vector<std::vector<index_type>> out;
    out.reserve(secondary_.size());
    for (const SecondaryNode& node : secondary_) {
        auto& ids = out.emplace_back();
        for (std::uint32_t k = node.lo; k < node.hi; ++k) {
            ids.push_back(by_phi2_[k].id);
        }
    }
    return out;
}

std::vector<std::vector<index_type>> DualIndex::crossing_decomposition(Point a) const {
    check_left(a);
    std::vector<std::vector<index_type>> pieces;
    const PhiImage pa = phi(a, tau_);
    const auto split = static_cast<std::uint32_t>(
        std::upper_bound(phi1_.begin(), phi1_.end(), pa.phi1) - phi1_.begin());
    visit_range(split, static_cast<std::uint32_t>(entries_.size()), pa.phi2, true, false,
                [&](const SecondaryNode*, std::span<const Entry> piece) {
                    auto& ids = pieces.emplace_back();
                    for (const Entry& e : piece) ids.push_back(e.id);
                    return false;
                });
    return pieces;
}

}  // namespace udg
