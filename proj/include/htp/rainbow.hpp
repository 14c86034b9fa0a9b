#pragma once

#include <optional>
#include <span>
#include <vector>

#include "htp/coloring.hpp"

namespace htp {

/// An acyclic edge set whose colors are pairwise distinct.
struct RainbowForest {
  std::vector<ColoredEdge> edges;  // lexicographic order

  int size() const noexcept { return static_cast<int>(edges.size()); }
};

/// Maximum rainbow forest of the subgraph induced by `within`, found by
/// matroid intersection (graphic matroid x color partition matroid). Among
/// all maximizers, the one whose sorted edge list is lexicographically
/// smallest is returned.
RainbowForest max_rainbow_forest(const EdgeColoring& c, std::span<const Vertex> within);

/// Size of a maximum rainbow forest without the lexicographic tie-break.
int max_rainbow_forest_size(const EdgeColoring& c, std::span<const Vertex> within);

bool has_rainbow_spanning_tree(const EdgeColoring& c, std::span<const Vertex> within);

/// The lexicographically smallest rainbow spanning tree of the induced
/// subgraph, or nullopt when none exists.
std::optional<RainbowForest> rainbow_spanning_tree(const EdgeColoring& c, std::span<const Vertex> within);

inline constexpr int kBruteforceEdgeLimit = 21;

/// Exhaustive maximum over edge subsets. Throws GuardError when the induced
/// subgraph has more than kBruteforceEdgeLimit edges.
int max_rainbow_forest_bruteforce(const EdgeColoring& c, std::span<const Vertex> within);

namespace detail {

/// Ground-set element for the intersection: an edge between local vertex ids
/// carrying a color id. Parallel edges are allowed.
struct IntersectionItem {
  int a;
  int b;
  int color;
};

/// Indices of a maximum common independent set of the graphic matroid on
/// `vertex_count` vertices and the partition matroid given by colors.
/// Stops early once `target` elements are found (target < 0: no limit).
std::vector<int> max_common_independent(int vertex_count, std::span<const IntersectionItem> items, int target = -1);

}  // namespace detail

}  // namespace htp
