#include "htp/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "htp/error.hpp"

namespace htp {

namespace {

bool pair_in_range(const ColoredEdge& e, int n) { return 0 <= e.u && e.u < e.v && e.v < n; }

}  // namespace

std::string to_string(const Violation& v) {
  switch (v.kind) {
    case ViolationKind::BadParameters: return "BadParameters";
    case ViolationKind::BadVertex: return "BadVertex(edge " + std::to_string(v.detail) + ")";
    case ViolationKind::BadColor: return "BadColor(" + std::to_string(v.detail) + ")";
    case ViolationKind::DuplicateEdge: return "DuplicateEdge(edge " + std::to_string(v.detail) + ")";
    case ViolationKind::MissingColor: return "MissingColor(" + std::to_string(v.detail) + ")";
    case ViolationKind::IncompleteGraph: return "IncompleteGraph";
  }
  return "Unknown";
}

EdgeColoring::EdgeColoring(int n, int r, std::vector<ColoredEdge> edges, bool complete)
    : n_(n), r_(r), complete_(complete), edges_(std::move(edges)) {
  std::stable_sort(edges_.begin(), edges_.end(),
                   [](const ColoredEdge& a, const ColoredEdge& b) { return a.edge() < b.edge(); });
  if (n_ > 0) {
    matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (const auto& e : edges_) {
      if (!pair_in_range(e, n_)) continue;
      auto& slot = matrix_[static_cast<std::size_t>(e.u) * n_ + e.v];
      if (slot == 0) {
        slot = e.color;
        matrix_[static_cast<std::size_t>(e.v) * n_ + e.u] = e.color;
      }
    }
  }
}

Color EdgeColoring::color(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return 0;
  return matrix_[static_cast<std::size_t>(u) * n_ + v];
}

std::vector<Edge> EdgeColoring::edges_of_color(Color c) const {
  std::vector<Edge> out;
  for (const auto& e : edges_)
    if (e.color == c) out.push_back(e.edge());
  return out;
}

std::vector<Violation> validate(const EdgeColoring& c) {
  std::vector<Violation> out;
  const int n = c.vertex_count();
  const int r = c.color_count();
  if (n < 1 || r < 0 || (r == 0 && n > 1)) out.push_back({ViolationKind::BadParameters, 0});

  std::vector<bool> seen(static_cast<std::size_t>(std::max(r, 0)) + 1, false);
  const auto& edges = c.edges();
  std::size_t good_pairs = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (!pair_in_range(e, n)) {
      out.push_back({ViolationKind::BadVertex, static_cast<int>(i)});
    } else if (i > 0 && edges[i - 1].edge() == e.edge()) {
      out.push_back({ViolationKind::DuplicateEdge, static_cast<int>(i)});
    } else {
      ++good_pairs;
    }
    if (e.color < 1 || e.color > r) {
      out.push_back({ViolationKind::BadColor, e.color});
    } else {
      seen[static_cast<std::size_t>(e.color)] = true;
    }
  }
  for (Color col = 1; col <= r; ++col)
    if (!seen[static_cast<std::size_t>(col)]) out.push_back({ViolationKind::MissingColor, col});
  if (c.complete() && static_cast<std::int64_t>(good_pairs) != choose2(n))
    out.push_back({ViolationKind::IncompleteGraph, 0});
  return out;
}

void require_valid(const EdgeColoring& c) {
  auto violations = validate(c);
  if (violations.empty()) return;
  std::string msg = "invalid coloring:";
  for (const auto& v : violations) msg += " " + to_string(v);
  throw Error(ErrorCode::InvalidColoring, msg);
}

void normalize(TreePartition& p) {
  for (auto& t : p.trees) {
    std::sort(t.vertices.begin(), t.vertices.end());
    for (auto& e : t.edges)
      if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(t.edges.begin(), t.edges.end());
  }
  std::sort(p.trees.begin(), p.trees.end(), [](const Tree& a, const Tree& b) {
    if (a.vertices.empty() || b.vertices.empty()) return a.vertices.size() < b.vertices.size();
    return a.vertices.front() < b.vertices.front();
  });
}

PartitionCheck is_partition_valid(const EdgeColoring& c, const TreePartition& p) {
  const int n = c.vertex_count();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  auto fail = [](std::string msg) { return PartitionCheck{false, std::move(msg)}; };

  for (std::size_t ti = 0; ti < p.trees.size(); ++ti) {
    const Tree& t = p.trees[ti];
    const std::string where = "tree " + std::to_string(ti) + ": ";
    if (t.vertices.empty()) return fail(where + "empty vertex set");
    for (Vertex v : t.vertices) {
      if (v < 0 || v >= n) return fail(where + "vertex " + std::to_string(v) + " out of range");
      if (owner[static_cast<std::size_t>(v)] != -1)
        return fail(where + "vertex " + std::to_string(v) + " already covered");
      owner[static_cast<std::size_t>(v)] = static_cast<int>(ti);
    }
    if (t.edges.size() + 1 != t.vertices.size())
      return fail(where + "edge count does not match a tree on its vertices");

    std::vector<Vertex> sorted(t.vertices.begin(), t.vertices.end());
    std::sort(sorted.begin(), sorted.end());
    auto index_of = [&](Vertex v) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
      return it == sorted.end() || *it != v ? -1 : static_cast<int>(it - sorted.begin());
    };
    std::vector<int> uf(sorted.size());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[static_cast<std::size_t>(x)] != x) x = uf[static_cast<std::size_t>(x)];
      return x;
    };
    std::vector<Color> colors;
    for (const auto& e : t.edges) {
      const int a = index_of(e.u);
      const int b = index_of(e.v);
      if (a < 0 || b < 0) return fail(where + "edge leaves the tree's vertex set");
      const Color actual = c.color(e.u, e.v);
      if (actual == 0)
        return fail(where + "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
      if (actual != e.color)
        return fail(where + "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has color " +
                    std::to_string(actual) + ", recorded " + std::to_string(e.color));
      const int ra = find(a);
      const int rb = find(b);
      if (ra == rb) return fail(where + "cycle");
      uf[static_cast<std::size_t>(ra)] = rb;
      colors.push_back(actual);
    }
    std::sort(colors.begin(), colors.end());
    if (std::adjacent_find(colors.begin(), colors.end()) != colors.end())
      return fail(where + "repeated color");
  }
  for (Vertex v = 0; v < n; ++v)
    if (owner[static_cast<std::size_t>(v)] == -1) return fail("vertex " + std::to_string(v) + " not covered");
  return {};
}

EdgeColoring merge_colors(const EdgeColoring& c, Color from, Color to) {
  const int r = c.color_count();
  if (from == to || from < 1 || from > r || to < 1 || to > r)
    throw Error(ErrorCode::InvalidArgument, "merge_colors: need distinct colors in 1.." + std::to_string(r));
  std::vector<ColoredEdge> edges = c.edges();
  for (auto& e : edges) {
    if (e.color == from) e.color = to;
    if (e.color > from) --e.color;
  }
  return EdgeColoring(c.vertex_count(), r - 1, std::move(edges), c.complete());
}

Restriction restrict_to(const EdgeColoring& c, std::span<const Vertex> keep) {
  const int n = c.vertex_count();
  const int r = c.color_count();
  RestrictMaps maps;
  maps.vertex_from_old.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw Error(ErrorCode::InvalidArgument, "restrict: empty vertex set");
  for (Vertex v : sorted) {
    if (v < 0 || v >= n) throw Error(ErrorCode::InvalidArgument, "restrict: vertex out of range");
    maps.vertex_from_old[static_cast<std::size_t>(v)] = static_cast<Vertex>(maps.vertex_to_old.size());
    maps.vertex_to_old.push_back(v);
  }

  std::vector<bool> used(static_cast<std::size_t>(r) + 1, false);
  std::vector<ColoredEdge> kept;
  for (const auto& e : c.edges()) {
    if (e.u < 0 || e.v >= n || e.u >= e.v) continue;
    const Vertex a = maps.vertex_from_old[static_cast<std::size_t>(e.u)];
    const Vertex b = maps.vertex_from_old[static_cast<std::size_t>(e.v)];
    if (a < 0 || b < 0) continue;
    kept.push_back({a, b, e.color});
    if (e.color >= 1 && e.color <= r) used[static_cast<std::size_t>(e.color)] = true;
  }
  maps.color_from_old.assign(static_cast<std::size_t>(r), 0);
  for (Color col = 1; col <= r; ++col) {
    if (!used[static_cast<std::size_t>(col)]) continue;
    maps.color_to_old.push_back(col);
    maps.color_from_old[static_cast<std::size_t>(col - 1)] = static_cast<Color>(maps.color_to_old.size());
  }
  for (auto& e : kept) e.color = maps.color_from_old[static_cast<std::size_t>(e.color - 1)];

  const int m = static_cast<int>(sorted.size());
  const bool complete = static_cast<std::int64_t>(kept.size()) == choose2(m);
  EdgeColoring out(m, static_cast<int>(maps.color_to_old.size()), std::move(kept), complete);
  return {std::move(out), std::move(maps)};
}

}  // namespace htp
