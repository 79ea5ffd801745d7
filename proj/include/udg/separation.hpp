#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "udg/delaunay.hpp"
#include "udg/geom.hpp"
#include "udg/sssp.hpp"

namespace udg {

// N[p]: crossing parity of the tree path root -> p. kNoParity when p is
// unreached.
struct ParityTable {
    static constexpr std::uint8_t kNoParity = 0xFF;
    std::vector<std::uint8_t> bits;

    std::uint8_t operator[](index_type p) const noexcept { return bits[p]; }
};

ParityTable compute_parities(const ShortestPathResult& spr, std::span<const Point> points,
                             double tau);

/// Parity of the closed walk root -> p, edge pq, q -> root.
inline std::uint8_t walk_parity(const ParityTable& n, std::span<const Point> points, index_type p,
                                index_type q, double tau) noexcept {
    return static_cast<std::uint8_t>(n[p] ^ n[q] ^ (crosses_terminal(points[p], points[q], tau) ? 1 : 0));
}

struct SeparationWitness {
    index_type root = kNoIndex;
    index_type p = kNoIndex;
    index_type q = kNoIndex;
};

// size is nullopt when no set of disks separates s from t.
struct SeparationAnswer {
    std::optional<std::uint32_t> size;
    std::optional<SeparationWitness> witness;

    bool feasible() const noexcept { return size.has_value(); }
};

/// Every root, every edge of its component: minimum of
/// dist[p] + dist[q] + 1 over edges with odd walk parity.
/// Throws TerminalCovered.
SeparationAnswer separation_generic(const NormalizedInstance& inst);

/// Spanning forest of G(subset); true iff some edge closes an odd-parity
/// cycle. Independent of the SSSP code (plain all-pairs BFS).
/// Throws TerminalCovered.
bool is_separating(std::span<const Point> subset, double tau);

/// Vertex sequence of cycle(T_root, pq), starting at p and ending at q.
std::vector<index_type> witness_cycle(std::span<const Point> points, const Triangulation& dt,
                                      const SeparationWitness& witness);

}  // namespace udg
