#include "udg/sssp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "udg/grid.hpp"
#include "udg/neighbor.hpp"

namespace udg {
namespace {

ShortestPathResult fresh_result(std::size_t n, index_type root) {
    check_index(root, n);
    ShortestPathResult r;
    r.root = root;
    r.dist.assign(n, kUnreached);
    r.parent.assign(n, kNoIndex);
    r.dist[root] = 0;
    return r;
}

}  // namespace

ShortestPathResult sssp_delaunay(std::span<const Point> points, const Triangulation& dt,
                                 index_type root, DelaunaySsspOptions options) {
    ShortestPathResult r = fresh_result(points.size(), root);

    std::vector<index_type> previous{root};
    std::vector<index_type> current;
    std::deque<index_type> queue;
    for (hop_count i = 1; !previous.empty(); ++i) {
        const NNIndex index = NNIndex::over(points, previous);
        queue.assign(previous.begin(), previous.end());
        current.clear();

        while (!queue.empty()) {
            const index_type q = queue.front();
            queue.pop_front();

            std::optional<Point> hint;
            if (options.use_hints) {
                hint = r.dist[q] == i - 1 ? points[q] : points[r.parent[q]];
            }
            for (const index_type p : dt.adjacent(q)) {
                if (r.dist[p] != kUnreached) continue;
                const Neighbor w = index.nearest(points[p], hint);
                if (w.dist_sq <= 1.0) {
                    r.dist[p] = i;
                    r.parent[p] = w.id;
                    queue.push_back(p);
                    current.push_back(p);
                }
            }
        }
        previous.swap(current);
    }
    return r;
}

ExplicitGraph build_explicit_graph(std::span<const Point> points) {
    const std::size_t n = points.size();
    ExplicitGraph g;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (within_unit(points[p], points[q])) {
                ++g.offsets_[p + 1];
                ++g.offsets_[q + 1];
            }
        }
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (within_unit(points[p], points[q])) {
                g.adjacency_[fill[p]++] = static_cast<index_type>(q);
                g.adjacency_[fill[q]++] = static_cast<index_type>(p);
            }
        }
    }
    return g;
}

ShortestPathResult bfs(const ExplicitGraph& graph, index_type root) {
    ShortestPathResult r = fresh_result(graph.size(), root);
    std::vector<index_type> queue{root};
    queue.reserve(graph.size());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const index_type q = queue[head];
        for (const index_type p : graph.adjacent(q)) {
            if (r.dist[p] == kUnreached) {
                r.dist[p] = r.dist[q] + 1;
                r.parent[p] = q;
                queue.push_back(p);
            }
        }
    }
    return r;
}

ShortestPathResult sssp_explicit_bfs(std::span<const Point> points, index_type root) {
    check_index(root, points.size());
    return bfs(build_explicit_graph(points), root);
}

ShortestPathResult sssp_grid(std::span<const Point> points, index_type root) {
    ShortestPathResult r = fresh_result(points.size(), root);

    CellMap cells = bucket_points(points);
    std::vector<std::uint32_t> slot(points.size());
    for (auto& [key, list] : cells) {
        for (std::uint32_t k = 0; k < list.size(); ++k) {
            slot[list[k]] = k;
        }
    }
    auto remove = [&](std::vector<index_type>& list, index_type p) {
        const std::uint32_t k = slot[p];
        list[k] = list.back();
        slot[list[k]] = k;
        list.pop_back();
    };
    remove(cells.find(cell_of(points[root]))->second, root);

    std::vector<index_type> queue{root};
    queue.reserve(points.size());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const index_type q = queue[head];
        const Point pq = points[q];
        const CellKey c = cell_of(pq);
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const auto it = cells.find({c.x + dx, c.y + dy});
                if (it == cells.end()) continue;
                auto& list = it->second;
                for (std::size_t k = 0; k < list.size();) {
                    const index_type p = list[k];
                    if (within_unit(pq, points[p])) {
                        r.dist[p] = r.dist[q] + 1;
                        r.parent[p] = q;
                        queue.push_back(p);
                        remove(list, p);
                    } else {
                        ++k;
                    }
                }
            }
        }
    }
    return r;
}

std::vector<std::vector<index_type>> levels_of(const ShortestPathResult& spr) {
    std::vector<std::vector<index_type>> levels;
    for (std::size_t p = 0; p < spr.dist.size(); ++p) {
        const hop_count d = spr.dist[p];
        if (d == kUnreached) continue;
        if (levels.size() <= d) levels.resize(d + 1);
        levels[d].push_back(static_cast<index_type>(p));
    }
    return levels;
}

std::optional<std::string> tree_violation(std::span<const Point> points,
                                          const ShortestPathResult& spr) {
    const std::size_t n = points.size();
    if (spr.dist.size() != n || spr.parent.size() != n) {
        return "table sizes differ from the point count";
    }
    if (spr.root >= n || spr.dist[spr.root] != 0 || spr.parent[spr.root] != kNoIndex) {
        return "root must have distance 0 and no parent";
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (p == spr.root) continue;
        const hop_count d = spr.dist[p];
        const index_type par = spr.parent[p];
        if (d == kUnreached) {
            if (par != kNoIndex) return "unreached point " + std::to_string(p) + " has a parent";
            continue;
        }
        if (par >= n) return "reached point " + std::to_string(p) + " has no parent";
        if (spr.dist[par] == kUnreached || spr.dist[par] + 1 != d) {
            return "dist[" + std::to_string(p) + "] != dist[parent] + 1";
        }
        if (!within_unit(points[p], points[par])) {
            return "tree edge at " + std::to_string(p) + " is longer than 1";
        }
    }
    // dist strictly decreases along parent links, so the links are acyclic
    // and every reached point leads to the root. With the edge condition
    // below, dist is exactly the hop distance.
    std::optional<std::string> bad;
    UnitGrid(points).for_each_edge([&](index_type p, index_type q) {
        if (bad) return;
        const hop_count a = spr.dist[p], b = spr.dist[q];
        if ((a == kUnreached) != (b == kUnreached)) {
            bad = "edge " + std::to_string(p) + "-" + std::to_string(q) + " leaves the reached set";
        } else if (a != kUnreached && (a > b + 1 || b > a + 1)) {
            bad = "edge " + std::to_string(p) + "-" + std::to_string(q) + " skips a level";
        }
    });
    return bad;
}

}  // namespace udg
