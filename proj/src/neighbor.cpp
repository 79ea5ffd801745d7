#include "udg/neighbor.hpp"

#include <algorithm>
#include <limits>

namespace udg {
namespace {

constexpr std::uint32_t kLeafSize = 8;

bool closer(double d, index_type id, const Neighbor& best) {
    return d < best.dist_sq || (d == best.dist_sq && id < best.id);
}

}  // namespace

double NNIndex::Node::box_dist_sq(Point p) const noexcept {
    double dx = 0.0, dy = 0.0;
    if (p.x < min_x) dx = min_x - p.x;
    else if (p.x > max_x) dx = p.x - max_x;
    if (p.y < min_y) dy = min_y - p.y;
    else if (p.y > max_y) dy = p.y - max_y;
    return dx * dx + dy * dy;
}

NNIndex::NNIndex(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw Error(ErrorCode::EmptySet, "nearest-neighbour index over an empty set");
    }
    nodes_.reserve(2 * (entries_.size() / kLeafSize + 1));
    build(0, static_cast<std::uint32_t>(entries_.size()));
}

NNIndex NNIndex::over(std::span<const Point> points, std::span<const index_type> ids) {
    std::vector<Entry> entries;
    entries.reserve(ids.size());
    for (const index_type id : ids) {
        entries.push_back({points[id], id});
    }
    return NNIndex(std::move(entries));
}

std::int32_t NNIndex::build(std::uint32_t begin, std::uint32_t end) {
    Node node{};
    node.min_x = node.min_y = std::numeric_limits<double>::infinity();
    node.max_x = node.max_y = -std::numeric_limits<double>::infinity();
    for (std::uint32_t k = begin; k < end; ++k) {
        const Point& p = entries_[k].point;
        node.min_x = std::min(node.min_x, p.x);
        node.min_y = std::min(node.min_y, p.y);
        node.max_x = std::max(node.max_x, p.x);
        node.max_y = std::max(node.max_y, p.y);
    }
    node.begin = begin;
    node.end = end;

    const auto self = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(node);
    if (end - begin <= kLeafSize) {
        return self;
    }

    const std::uint8_t axis = (node.max_x - node.min_x) >= (node.max_y - node.min_y) ? 0 : 1;
    const std::uint32_t mid = begin + (end - begin) / 2;
    auto key = [axis](const Entry& e) { return axis == 0 ? e.point.x : e.point.y; };
    std::nth_element(entries_.begin() + begin, entries_.begin() + mid, entries_.begin() + end,
                     [&](const Entry& a, const Entry& b) {
                         return key(a) < key(b) || (key(a) == key(b) && a.id < b.id);
                     });

    const std::int32_t left = build(begin, mid);
    const std::int32_t right = build(mid, end);
    nodes_[self].left = left;
    nodes_[self].right = right;
    nodes_[self].axis = axis;
    nodes_[self].split = key(entries_[mid]);
    return self;
}

Neighbor NNIndex::nearest(Point p, std::optional<Point> hint) const {
    Neighbor best{{}, kNoIndex, std::numeric_limits<double>::infinity()};

    auto scan = [&](const Node& leaf) {
        for (std::uint32_t k = leaf.begin; k < leaf.end; ++k) {
            const Entry& e = entries_[k];
            const double d = dist_sq(p, e.point);
            if (closer(d, e.id, best)) {
                best = {e.point, e.id, d};
            }
        }
    };

    if (hint) {
        std::int32_t v = 0;
        while (!nodes_[v].leaf()) {
            const Node& node = nodes_[v];
            const double c = node.axis == 0 ? hint->x : hint->y;
            v = c < node.split ? node.left : node.right;
        }
        scan(nodes_[v]);
    }

    // Fixed-capacity stack: depth is logarithmic in the entry count.
    std::int32_t stack[128];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
        const Node& node = nodes_[stack[--top]];
        if (node.box_dist_sq(p) > best.dist_sq) {
            continue;
        }
        if (node.leaf()) {
            scan(node);
            continue;
        }
        const Node& l = nodes_[node.left];
        const Node& r = nodes_[node.right];
        // Push the farther child first so the nearer one is explored first.
        if (l.box_dist_sq(p) <= r.box_dist_sq(p)) {
            stack[top++] = node.right;
            stack[top++] = node.left;
        } else {
            stack[top++] = node.left;
            stack[top++] = node.right;
        }
    }
    return best;
}

std::optional<Neighbor> NNIndex::any_within_unit(Point p) const {
    std::int32_t stack[128];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
        const Node& node = nodes_[stack[--top]];
        if (node.box_dist_sq(p) > 1.0) {
            continue;
        }
        if (node.leaf()) {
            for (std::uint32_t k = node.begin; k < node.end; ++k) {
                const Entry& e = entries_[k];
                const double d = dist_sq(p, e.point);
                if (d <= 1.0) {
                    return Neighbor{e.point, e.id, d};
                }
            }
            continue;
        }
        stack[top++] = node.right;
        stack[top++] = node.left;
    }
    return std::nullopt;
}

}  // namespace udg
