#pragma once

#include <optional>
#include <vector>

#include "htp/coloring.hpp"

namespace htp {

/// One edge per color, all colors distinct by construction. Its vertex set is
/// the set of endpoints, so no vertex of it is isolated.
struct RepresentativeSubgraph {
  std::vector<Edge> representative;  // index color-1

  struct Component {
    std::vector<Vertex> vertices;  // sorted
    std::vector<Color> colors;     // colors of its representative edges, ascending
  };
  /// Ordered by size descending, ties by smallest vertex.
  std::vector<Component> components;

  int largest() const { return components.empty() ? 0 : static_cast<int>(components.front().vertices.size()); }
};

/// Recomputes the components from the representative edges.
RepresentativeSubgraph make_representative_subgraph(int n, std::vector<Edge> representative);

/// The lexicographically smallest edge of every color. Requires r >= 1.
RepresentativeSubgraph initial_representatives(const EdgeColoring& c);

struct SwapMove {
  Color color = 0;
  Edge removed;
  Edge added;
  int largest_after = 0;
};

/// First reassignment (colors ascending, candidate edges lexicographic) that
/// strictly enlarges the largest component, or nullopt at a local maximum.
std::optional<SwapMove> find_swap(const RepresentativeSubgraph& s, const EdgeColoring& c);

RepresentativeSubgraph apply_swap(const RepresentativeSubgraph& s, const SwapMove& move, int n);

struct LevelTrace {
  int n = 0;
  int r = 0;
  int swaps = 0;
  int largest = 0;     // order of the split-off component
  int components = 0;  // component count at the local maximum
};

struct ConstructResult {
  TreePartition partition;
  int bound = 0;  // closed-form partition number for (n, r)
  std::vector<LevelTrace> levels;
};

/// Polynomial partition of a complete graph: hill-climb the representative
/// subgraph, emit a spanning tree of its largest component, and recurse on
/// the coloring restricted to the remaining vertices.
///
/// Throws DefectError, carrying the instance, if the tree count exceeds the
/// closed-form bound at any level or a local maximum violates its expected
/// structure.
ConstructResult partition_complete(const EdgeColoring& c);

}  // namespace htp
