#include "udg/separation.hpp"

#include <algorithm>

#include "udg/grid.hpp"

namespace udg {

ParityTable compute_parities(const ShortestPathResult& spr, std::span<const Point> points,
                             double tau) {
    ParityTable table;
    table.bits.assign(points.size(), ParityTable::kNoParity);
    table.bits[spr.root] = 0;
    // Non-decreasing dist: a parent is always settled before its children.
    for (const auto& level : levels_of(spr)) {
        for (const index_type p : level) {
            if (p == spr.root) continue;
            const index_type par = spr.parent[p];
            table.bits[p] = static_cast<std::uint8_t>(
                table.bits[par] ^ (crosses_terminal(points[p], points[par], tau) ? 1 : 0));
        }
    }
    return table;
}

SeparationAnswer separation_generic(const NormalizedInstance& inst) {
    const auto& points = inst.points;
    require_uncovered(points, inst.tau);
    const Triangulation dt = build_delaunay(points);
    const UnitGrid grid(points);

    const auto n = static_cast<index_type>(points.size());
    std::uint32_t best = n + 1;
    SeparationAnswer answer;

    for (index_type r = 0; r < n; ++r) {
        const ShortestPathResult spr = sssp_delaunay(points, dt, r);
        const ParityTable parity = compute_parities(spr, points, inst.tau);
        for (index_type p = 0; p < n; ++p) {
            if (!spr.reached(p)) continue;
            grid.for_each_neighbor(p, [&](index_type q) {
                if (q < p) return;
                if (walk_parity(parity, points, p, q, inst.tau) == 0) return;
                const std::uint32_t len = spr.dist[p] + spr.dist[q] + 1;
                if (len < best) {
                    best = len;
                    answer.witness = SeparationWitness{r, p, q};
                }
            });
        }
    }
    if (best <= n) {
        answer.size = best;
    }
    return answer;
}

bool is_separating(std::span<const Point> subset, double tau) {
    require_uncovered(subset, tau);
    const std::size_t m = subset.size();

    std::vector<std::uint8_t> parity(m, ParityTable::kNoParity);
    std::vector<std::size_t> queue;
    queue.reserve(m);
    for (std::size_t start = 0; start < m; ++start) {
        if (parity[start] != ParityTable::kNoParity) continue;
        parity[start] = 0;
        queue.assign(1, start);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t u = queue[head];
            for (std::size_t v = 0; v < m; ++v) {
                if (parity[v] != ParityTable::kNoParity || !within_unit(subset[u], subset[v])) {
                    continue;
                }
                parity[v] = static_cast<std::uint8_t>(
                    parity[u] ^ (crosses_terminal(subset[u], subset[v], tau) ? 1 : 0));
                queue.push_back(v);
            }
        }
    }
    // Forest edges always close with parity 0, so testing every edge is
    // the same as testing the non-forest ones.
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = u + 1; v < m; ++v) {
            if (!within_unit(subset[u], subset[v])) continue;
            const int cr = crosses_terminal(subset[u], subset[v], tau) ? 1 : 0;
            if ((parity[u] ^ parity[v] ^ cr) != 0) {
                return true;
            }
        }
    }
    return false;
}

std::vector<index_type> witness_cycle(std::span<const Point> points, const Triangulation& dt,
                                      const SeparationWitness& witness) {
    const ShortestPathResult spr = sssp_delaunay(points, dt, witness.root);
    check_index(witness.p, points.size());
    check_index(witness.q, points.size());

    std::vector<index_type> up_p{witness.p};
    std::vector<index_type> up_q{witness.q};
    index_type a = witness.p;
    index_type b = witness.q;
    while (spr.dist[a] > spr.dist[b]) up_p.push_back(a = spr.parent[a]);
    while (spr.dist[b] > spr.dist[a]) up_q.push_back(b = spr.parent[b]);
    while (a != b) {
        up_p.push_back(a = spr.parent[a]);
        up_q.push_back(b = spr.parent[b]);
    }
    // up_p ends at the common ancestor; append q's branch without it.
    up_q.pop_back();
    std::reverse(up_q.begin(), up_q.end());
    up_p.insert(up_p.end(), up_q.begin(), up_q.end());
    return up_p;
}

}  // namespace udg
