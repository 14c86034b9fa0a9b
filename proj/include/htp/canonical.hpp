#pragma once

#include <map>
#include <optional>
#include <vector>

#include "htp/coloring.hpp"

namespace htp {

/// Roles of the extremal coloring: a rainbow clique on S = {0..t-1}, the
/// leftover colors on edges between u = t and S, and a single fill color on
/// every other edge.
struct CanonicalLayout {
  int t = 0;
  std::vector<Vertex> clique;           // S
  Vertex hub = 0;                       // u
  std::optional<Vertex> extra;          // v, absent when n = t + 1
  std::optional<Color> fill_color;      // absent when no edge is left for it
  std::map<Color, Edge> hub_edges;      // leftover color -> u-S edge
};

struct CanonicalOptions {
  /// Fill color to use when every color is already taken by the clique and
  /// hub edges. Defaults to color 1.
  std::optional<Color> fill_when_exhausted;
};

struct CanonicalColoring {
  EdgeColoring coloring;
  CanonicalLayout layout;
};

/// Requires n >= 3 and 2 <= r <= C(n,2).
CanonicalColoring generate_canonical(int n, int r, const CanonicalOptions& options = {});

/// A partition with ceil((n - t)/2) trees: a rainbow spanning tree on
/// S + u + v, a perfect matching on the rest, and a singleton when the rest
/// has odd size.
TreePartition extremal_partition(const EdgeColoring& c, const CanonicalLayout& layout);

}  // namespace htp
