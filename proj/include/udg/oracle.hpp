#pragma once

// Brute-force references. No spatial structures, no Delaunay; used by the
// tests and by the CLI's --verify flags.

#include <span>

#include "udg/geom.hpp"
#include "udg/separation.hpp"
#include "udg/sssp.hpp"

namespace udg {

inline constexpr std::size_t kOracleSeparationMaxPoints = 20;

/// Textbook BFS over the all-pairs adjacency. Throws IndexOutOfRange.
ShortestPathResult oracle_sssp(std::span<const Point> points, index_type root);

/// Smallest k such that some k-subset satisfies is_separating; subsets are
/// enumerated by increasing cardinality. The witness is left empty.
/// Throws TooLarge for more than 20 points, TerminalCovered.
SeparationAnswer oracle_separation(std::span<const Point> points, double tau);

}  // namespace udg
