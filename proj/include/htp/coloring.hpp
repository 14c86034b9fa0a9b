#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace htp {

using Vertex = int;
using Color = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct ColoredEdge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  Edge edge() const { return {u, v}; }
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

inline std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

enum class ViolationKind {
  BadParameters,    // n < 1, r < 0, or r = 0 with more than one vertex
  BadVertex,        // pair not of the form 0 <= u < v < n
  BadColor,         // color outside 1..r
  DuplicateEdge,
  MissingColor,     // a declared color has no edge
  IncompleteGraph,  // flagged complete but fewer than C(n,2) pairs
};

struct Violation {
  ViolationKind kind;
  int detail = 0;  // the color for MissingColor/BadColor, the edge index otherwise

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(const Violation& v);

/// An edge-colored simple graph on vertices 0..n-1 with colors 1..r.
///
/// Construction never throws on structural problems; they are reported by
/// validate(). Operations that need a well-formed coloring check it first.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(int n, int r, std::vector<ColoredEdge> edges, bool complete);

  /// Complete graph on n vertices; `color_of(u, v)` is queried for every pair u < v.
  template <typename F>
  static EdgeColoring complete_from(int n, int r, F&& color_of) {
    std::vector<ColoredEdge> edges;
    edges.reserve(static_cast<std::size_t>(choose2(n)));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, color_of(u, v)});
    return EdgeColoring(n, r, std::move(edges), true);
  }

  int vertex_count() const noexcept { return n_; }
  int color_count() const noexcept { return r_; }
  bool complete() const noexcept { return complete_; }

  /// Edges sorted lexicographically by (u, v). Invalid pairs are kept as given.
  const std::vector<ColoredEdge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Color of the pair, 0 when absent. Order of u and v does not matter.
  Color color(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return color(u, v) != 0; }

  /// Edges of one color in lexicographic order.
  std::vector<Edge> edges_of_color(Color c) const;

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.complete_ == b.complete_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  int r_ = 0;
  bool complete_ = false;
  std::vector<ColoredEdge> edges_;
  std::vector<Color> matrix_;  // n*n, 0 = no edge
};

std::vector<Violation> validate(const EdgeColoring& c);

/// Throws Error(InvalidColoring) listing every violation.
void require_valid(const EdgeColoring& c);

struct Tree {
  std::vector<Vertex> vertices;    // sorted
  std::vector<ColoredEdge> edges;  // sorted

  friend bool operator==(const Tree&, const Tree&) = default;
};

struct TreePartition {
  std::vector<Tree> trees;

  int count() const noexcept { return static_cast<int>(trees.size()); }
  friend bool operator==(const TreePartition&, const TreePartition&) = default;
};

/// Sorts each tree's vertices and edges and orders trees by smallest vertex.
void normalize(TreePartition& p);

struct PartitionCheck {
  bool valid = true;
  std::string violation;  // first violation found, empty when valid

  explicit operator bool() const noexcept { return valid; }
};

PartitionCheck is_partition_valid(const EdgeColoring& c, const TreePartition& p);

/// Recolors every edge of color `from` with `to`, then renumbers the colors
/// above `from` down by one.
EdgeColoring merge_colors(const EdgeColoring& c, Color from, Color to);

struct RestrictMaps {
  std::vector<Vertex> vertex_to_old;    // new -> old
  std::vector<Color> color_to_old;      // index new-1 -> old
  std::vector<Vertex> vertex_from_old;  // old -> new, -1 when dropped
  std::vector<Color> color_from_old;    // index old-1 -> new, 0 when dropped
};

struct Restriction {
  EdgeColoring coloring;
  RestrictMaps maps;
};

/// Induced coloring on `keep`, with vertices and surviving colors renumbered
/// densely in their original order.
Restriction restrict_to(const EdgeColoring& c, std::span<const Vertex> keep);

// Text formats.

EdgeColoring parse_coloring(std::string_view text);
EdgeColoring load_coloring(const std::string& path);
std::string format_coloring(const EdgeColoring& c);
void save_coloring(const EdgeColoring& c, const std::string& path);

/// Partition lines reference edges as (u,v); colors are taken from `c`.
TreePartition parse_partition(const EdgeColoring& c, std::string_view text);
std::string format_partition(const TreePartition& p);

}  // namespace htp
