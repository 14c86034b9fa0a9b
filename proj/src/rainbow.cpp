#include "htp/rainbow.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "htp/error.hpp"

namespace htp {

namespace detail {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Cardinality matroid intersection by shortest augmenting paths in the
// exchange graph.
class Intersection {
 public:
  Intersection(int vertex_count, std::span<const IntersectionItem> items)
      : nv_(vertex_count), items_(items), in_(items.size(), false) {
    int max_color = 0;
    for (const auto& it : items_) max_color = std::max(max_color, it.color);
    owner_.assign(static_cast<std::size_t>(max_color) + 1, -1);
  }

  std::vector<int> run(int target) {
    int cap = std::max(nv_ - 1, 0);
    {
      std::vector<bool> seen(owner_.size(), false);
      int distinct = 0;
      for (const auto& it : items_)
        if (!seen[static_cast<std::size_t>(it.color)]) {
          seen[static_cast<std::size_t>(it.color)] = true;
          ++distinct;
        }
      cap = std::min(cap, distinct);
    }
    if (target >= 0) cap = std::min(cap, target);

    UnionFind uf(nv_);
    for (std::size_t i = 0; i < items_.size() && size_ < cap; ++i) {
      const auto& it = items_[i];
      if (owner_[static_cast<std::size_t>(it.color)] != -1) continue;
      if (!uf.unite(it.a, it.b)) continue;
      add(static_cast<int>(i));
    }
    while (size_ < cap && augment()) {
    }

    std::vector<int> out;
    for (std::size_t i = 0; i < items_.size(); ++i)
      if (in_[i]) out.push_back(static_cast<int>(i));
    return out;
  }

 private:
  void add(int i) {
    in_[static_cast<std::size_t>(i)] = true;
    owner_[static_cast<std::size_t>(items_[static_cast<std::size_t>(i)].color)] = i;
    ++size_;
  }

  bool augment() {
    const std::size_t m = items_.size();
    const auto nv = static_cast<std::size_t>(nv_);

    // Rooted spanning forest of the current independent set.
    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (neighbor, item)
    for (std::size_t i = 0; i < m; ++i)
      if (in_[i]) {
        const auto& it = items_[i];
        adj[static_cast<std::size_t>(it.a)].push_back({it.b, static_cast<int>(i)});
        adj[static_cast<std::size_t>(it.b)].push_back({it.a, static_cast<int>(i)});
      }
    std::vector<int> comp(nv, -1), depth(nv, 0), up_vertex(nv, -1), up_item(nv, -1);
    for (std::size_t root = 0; root < nv; ++root) {
      if (comp[root] != -1) continue;
      comp[root] = static_cast<int>(root);
      std::vector<int> stack{static_cast<int>(root)};
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (auto [y, item] : adj[static_cast<std::size_t>(x)]) {
          if (comp[static_cast<std::size_t>(y)] != -1) continue;
          comp[static_cast<std::size_t>(y)] = static_cast<int>(root);
          depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
          up_vertex[static_cast<std::size_t>(y)] = x;
          up_item[static_cast<std::size_t>(y)] = item;
          stack.push_back(y);
        }
      }
    }

    std::vector<bool> source(m, false), sink(m, false);
    std::vector<std::vector<int>> exits(m);  // I-item x -> outside items y with I - x + y a forest
    for (std::size_t y = 0; y < m; ++y) {
      if (in_[y]) continue;
      const auto& it = items_[y];
      source[y] = comp[static_cast<std::size_t>(it.a)] != comp[static_cast<std::size_t>(it.b)];
      sink[y] = owner_[static_cast<std::size_t>(it.color)] == -1;
      if (source[y] && sink[y]) {
        add(static_cast<int>(y));
        return true;
      }
      if (source[y]) continue;
      int a = it.a;
      int b = it.b;
      while (a != b) {
        if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]) std::swap(a, b);
        exits[static_cast<std::size_t>(up_item[static_cast<std::size_t>(a)])].push_back(static_cast<int>(y));
        a = up_vertex[static_cast<std::size_t>(a)];
      }
    }

    std::vector<int> prev(m, -2);
    std::deque<int> queue;
    for (std::size_t y = 0; y < m; ++y)
      if (source[y]) {
        prev[y] = -1;
        queue.push_back(static_cast<int>(y));
      }
    int found = -1;
    while (!queue.empty() && found < 0) {
      const int node = queue.front();
      queue.pop_front();
      const auto un = static_cast<std::size_t>(node);
      if (!in_[un]) {
        if (sink[un]) {
          found = node;
          break;
        }
        const int x = owner_[static_cast<std::size_t>(items_[un].color)];
        if (prev[static_cast<std::size_t>(x)] == -2) {
          prev[static_cast<std::size_t>(x)] = node;
          queue.push_back(x);
        }
      } else {
        for (int y : exits[un])
          if (prev[static_cast<std::size_t>(y)] == -2) {
            prev[static_cast<std::size_t>(y)] = node;
            queue.push_back(y);
          }
      }
    }
    if (found < 0) return false;

    for (int node = found; node >= 0; node = prev[static_cast<std::size_t>(node)])
      in_[static_cast<std::size_t>(node)] = !in_[static_cast<std::size_t>(node)];
    std::fill(owner_.begin(), owner_.end(), -1);
    size_ = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (in_[i]) {
        owner_[static_cast<std::size_t>(items_[i].color)] = static_cast<int>(i);
        ++size_;
      }
    return true;
  }

  int nv_;
  std::span<const IntersectionItem> items_;
  std::vector<bool> in_;
  std::vector<int> owner_;  // color -> item in the current set, -1 if free
  int size_ = 0;
};

}  // namespace

std::vector<int> max_common_independent(int vertex_count, std::span<const IntersectionItem> items, int target) {
  if (vertex_count <= 1 || items.empty()) return {};
  return Intersection(vertex_count, items).run(target);
}

}  // namespace detail

namespace {

struct InducedSubgraph {
  std::vector<Vertex> vertices;  // sorted, local id = index
  std::vector<ColoredEdge> edges;  // original ids, lexicographic
  std::vector<detail::IntersectionItem> items;  // local ids, parallel to edges
};

InducedSubgraph induce(const EdgeColoring& c, std::span<const Vertex> within) {
  InducedSubgraph g;
  g.vertices.assign(within.begin(), within.end());
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  if (g.vertices.empty()) throw Error(ErrorCode::InvalidArgument, "rainbow: empty vertex set");
  for (Vertex v : g.vertices)
    if (v < 0 || v >= c.vertex_count()) throw Error(ErrorCode::InvalidArgument, "rainbow: vertex out of range");
  const int k = static_cast<int>(g.vertices.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const Color col = c.color(g.vertices[static_cast<std::size_t>(i)], g.vertices[static_cast<std::size_t>(j)]);
      if (col == 0) continue;
      g.edges.push_back({g.vertices[static_cast<std::size_t>(i)], g.vertices[static_cast<std::size_t>(j)], col});
      g.items.push_back({i, j, col});
    }
  return g;
}

bool is_connected_forest(int vertex_count, std::span<const detail::IntersectionItem> items, std::span<const int> chosen) {
  detail::UnionFind uf(vertex_count);
  int merges = 0;
  for (int i : chosen) {
    const auto& it = items[static_cast<std::size_t>(i)];
    if (!uf.unite(it.a, it.b)) return false;
    ++merges;
  }
  return merges == vertex_count - 1;
}

// Greedy in lexicographic order: keep an element when some maximum common
// independent set still contains everything kept so far plus it.
std::vector<int> lexicographic_maximizer(int vertex_count, std::span<const detail::IntersectionItem> items, int best) {
  std::vector<int> chosen;
  detail::UnionFind uf(vertex_count);
  std::vector<bool> color_used;
  for (const auto& it : items)
    if (static_cast<std::size_t>(it.color) >= color_used.size()) color_used.resize(static_cast<std::size_t>(it.color) + 1, false);

  for (std::size_t i = 0; i < items.size() && static_cast<int>(chosen.size()) < best; ++i) {
    const auto& cand = items[i];
    if (color_used[static_cast<std::size_t>(cand.color)]) continue;
    if (uf.find(cand.a) == uf.find(cand.b)) continue;

    const int needed = best - static_cast<int>(chosen.size()) - 1;
    bool ok = needed == 0;
    if (!ok) {
      detail::UnionFind trial = uf;
      trial.unite(cand.a, cand.b);
      // Compress contracted classes to dense ids.
      std::vector<int> class_id(static_cast<std::size_t>(vertex_count), -1);
      int classes = 0;
      for (int v = 0; v < vertex_count; ++v) {
        const int root = trial.find(v);
        if (class_id[static_cast<std::size_t>(root)] == -1) class_id[static_cast<std::size_t>(root)] = classes++;
      }
      std::vector<detail::IntersectionItem> rest;
      for (std::size_t j = i + 1; j < items.size(); ++j) {
        const auto& it = items[j];
        if (it.color == cand.color || color_used[static_cast<std::size_t>(it.color)]) continue;
        const int a = class_id[static_cast<std::size_t>(trial.find(it.a))];
        const int b = class_id[static_cast<std::size_t>(trial.find(it.b))];
        if (a == b) continue;
        rest.push_back({a, b, it.color});
      }
      ok = static_cast<int>(detail::max_common_independent(classes, rest, needed).size()) == needed;
    }
    if (ok) {
      uf.unite(cand.a, cand.b);
      color_used[static_cast<std::size_t>(cand.color)] = true;
      chosen.push_back(static_cast<int>(i));
    }
  }
  return chosen;
}

}  // namespace

int max_rainbow_forest_size(const EdgeColoring& c, std::span<const Vertex> within) {
  const auto g = induce(c, within);
  return static_cast<int>(detail::max_common_independent(static_cast<int>(g.vertices.size()), g.items).size());
}

RainbowForest max_rainbow_forest(const EdgeColoring& c, std::span<const Vertex> within) {
  const auto g = induce(c, within);
  const int nv = static_cast<int>(g.vertices.size());
  const int best = static_cast<int>(detail::max_common_independent(nv, g.items).size());
  RainbowForest out;
  for (int i : lexicographic_maximizer(nv, g.items, best)) out.edges.push_back(g.edges[static_cast<std::size_t>(i)]);
  return out;
}

bool has_rainbow_spanning_tree(const EdgeColoring& c, std::span<const Vertex> within) {
  const auto g = induce(c, within);
  const int nv = static_cast<int>(g.vertices.size());
  if (nv == 1) return true;
  const auto chosen = detail::max_common_independent(nv, g.items, nv - 1);
  if (static_cast<int>(chosen.size()) != nv - 1) return false;
  // An acyclic set of nv-1 edges on nv vertices is always spanning.
  if (!is_connected_forest(nv, g.items, chosen))
    throw DefectError("maximum rainbow forest of full size is not a spanning tree", format_coloring(c));
  return true;
}

std::optional<RainbowForest> rainbow_spanning_tree(const EdgeColoring& c, std::span<const Vertex> within) {
  auto forest = max_rainbow_forest(c, within);
  std::vector<Vertex> vs(within.begin(), within.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (forest.size() + 1 != static_cast<int>(vs.size())) return std::nullopt;
  return forest;
}

int max_rainbow_forest_bruteforce(const EdgeColoring& c, std::span<const Vertex> within) {
  const auto g = induce(c, within);
  const int nv = static_cast<int>(g.vertices.size());
  const int m = static_cast<int>(g.items.size());
  if (m > kBruteforceEdgeLimit)
    throw GuardError("bruteforce forest: " + std::to_string(m) + " induced edges exceeds limit " +
                     std::to_string(kBruteforceEdgeLimit));

  std::vector<Color> colors;
  for (const auto& it : g.items) colors.push_back(it.color);
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  const int cap = std::min(nv - 1, static_cast<int>(colors.size()));

  // Include/exclude search over the edges in order. Acyclicity and distinct
  // colors are both hereditary, so pruning an invalid prefix loses nothing.
  int best = 0;
  std::vector<int> comp(static_cast<std::size_t>(nv));
  std::iota(comp.begin(), comp.end(), 0);
  std::vector<bool> used(colors.size(), false);
  auto search = [&](auto&& self, int i, int size) -> void {
    best = std::max(best, size);
    if (best == cap || i == m || size + (m - i) <= best) return;
    const auto& it = g.items[static_cast<std::size_t>(i)];
    const auto ci = static_cast<std::size_t>(std::lower_bound(colors.begin(), colors.end(), it.color) - colors.begin());
    const int ca = comp[static_cast<std::size_t>(it.a)];
    const int cb = comp[static_cast<std::size_t>(it.b)];
    if (!used[ci] && ca != cb) {
      const auto saved = comp;
      for (auto& x : comp)
        if (x == ca) x = cb;
      used[ci] = true;
      self(self, i + 1, size + 1);
      used[ci] = false;
      comp = saved;
    }
    self(self, i + 1, size);
  };
  search(search, 0, 0);
  return best;
}

}  // namespace htp
