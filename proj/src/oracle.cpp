#include "udg/oracle.hpp"

#include <vector>

namespace udg {

ShortestPathResult oracle_sssp(std::span<const Point> points, index_type root) {
    const std::size_t n = points.size();
    check_index(root, n);

    std::vector<std::vector<index_type>> adj(n);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (p != q && within_unit(points[p], points[q])) {
                adj[p].push_back(static_cast<index_type>(q));
            }
        }
    }

    ShortestPathResult r;
    r.root = root;
    r.dist.assign(n, kUnreached);
    r.parent.assign(n, kNoIndex);
    r.dist[root] = 0;
    std::vector<index_type> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const index_type u = queue[head];
        for (const index_type v : adj[u]) {
            if (r.dist[v] == kUnreached) {
                r.dist[v] = r.dist[u] + 1;
                r.parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    return r;
}

SeparationAnswer oracle_separation(std::span<const Point> points, double tau) {
    const std::size_t n = points.size();
    if (n > kOracleSeparationMaxPoints) {
        throw Error(ErrorCode::TooLarge, "oracle_separation handles at most 20 points");
    }
    require_uncovered(points, tau);

    std::vector<Point> subset;
    for (std::size_t k = 1; k <= n; ++k) {
        // Lexicographic k-combinations of {0..n-1}.
        std::vector<std::size_t> pick(k);
        for (std::size_t j = 0; j < k; ++j) pick[j] = j;
        while (true) {
            subset.clear();
            for (const std::size_t j : pick) subset.push_back(points[j]);
            if (is_separating(subset, tau)) {
                SeparationAnswer answer;
                answer.size = static_cast<std::uint32_t>(k);
                return answer;
            }
            std::size_t j = k;
            while (j > 0 && pick[j - 1] == n - k + (j - 1)) --j;
            if (j == 0) break;
            ++pick[j - 1];
            for (std::size_t m = j; m < k; ++m) pick[m] = pick[m - 1] + 1;
        }
    }
    return {};
}

}  // namespace udg
