#pragma once

#include <cstdint>

#include "htp/coloring.hpp"

namespace htp {

struct SolveOptions {
  int max_vertices = 14;
};

struct SolveStats {
  std::uint64_t subsets_explored = 0;   // candidate blocks considered
  std::uint64_t feasibility_checks = 0; // blocks sent to the rainbow engine
  std::uint64_t cache_hits = 0;
};

struct SolveResult {
  int count = 0;
  TreePartition partition;
  SolveStats stats;
};

/// Exact minimum number of vertex-disjoint rainbow trees covering all
/// vertices. Blocks must induce a rainbow spanning tree within the edges
/// present, so non-complete graphs are handled as well.
/// Throws GuardError when n exceeds options.max_vertices.
SolveResult solve(const EdgeColoring& c, const SolveOptions& options = {});

inline constexpr int kBruteforceVertexLimit = 7;

/// Minimum over all set partitions of the vertices, each block checked by
/// exhaustive edge-subset search. Independent of solve().
int solve_bruteforce(const EdgeColoring& c);

}  // namespace htp
