#include "htp/constructive.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "htp/error.hpp"
#include "htp/formula.hpp"

namespace htp {

namespace {

class Components {
 public:
  explicit Components(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n)) { reset(); }
  void reset() {
    std::iota(parent_.begin(), parent_.end(), 0);
    std::fill(size_.begin(), size_.end(), 1);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    return true;
  }
  int size_of(int x) { return size_[static_cast<std::size_t>(find(x))]; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

int largest_component(Components& comp, const std::vector<Edge>& edges) {
  comp.reset();
  int best = 0;
  for (const auto& e : edges) {
    comp.unite(e.u, e.v);
    best = std::max(best, comp.size_of(e.u));
  }
  return best;
}

std::string level_message(const std::string& what, int n, int r) {
  return "constructive: " + what + " (level n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
}

struct Builder {
  const EdgeColoring& top;
  TreePartition partition;
  std::vector<LevelTrace> levels;

  // Returns the number of trees emitted for `cur`, whose vertex i is
  // to_top[i] in the top-level coloring.
  int run(const EdgeColoring& cur, const std::vector<Vertex>& to_top) {
    const int n = cur.vertex_count();
    const int r = cur.color_count();
    const auto level = levels.size();
    levels.push_back({n, r, 0, 0, 0});

    if (n == 1) {
      partition.trees.push_back({{to_top[0]}, {}});
      levels[level].largest = 1;
      levels[level].components = 1;
      return 1;
    }
    if (r == 1) {
      int count = 0;
      for (Vertex v = 0; v < n; v += 2, ++count) {
        if (v + 1 < n) {
          const Vertex a = to_top[static_cast<std::size_t>(v)];
          const Vertex b = to_top[static_cast<std::size_t>(v) + 1];
          partition.trees.push_back({{a, b}, {{std::min(a, b), std::max(a, b), top.color(a, b)}}});
        } else {
          partition.trees.push_back({{to_top[static_cast<std::size_t>(v)]}, {}});
        }
      }
      levels[level].largest = 2;
      levels[level].components = count;
      return count;
    }

    auto s = initial_representatives(cur);
    int swaps = 0;
    while (auto move = find_swap(s, cur)) {
      s = apply_swap(s, *move, n);
      if (++swaps > n - 2) throw DefectError(level_message("more than n-2 swaps", n, r), format_coloring(top));
    }
    const auto& g1 = s.components.front();
    const int n1 = static_cast<int>(g1.vertices.size());
    const int t = static_cast<int>(threshold(r));
    levels[level].swaps = swaps;
    levels[level].largest = n1;
    levels[level].components = static_cast<int>(s.components.size());
    if (s.components.size() == 1 && n1 < n && n1 < t + 2)
      throw DefectError(level_message("connected local maximum smaller than t+2", n, r), format_coloring(top));

    // G1 is rainbow, so any spanning tree of it is.
    Tree tree;
    for (Vertex v : g1.vertices) tree.vertices.push_back(to_top[static_cast<std::size_t>(v)]);
    Components span(n);
    for (Color col : g1.colors) {
      const Edge e = s.representative[static_cast<std::size_t>(col - 1)];
      if (!span.unite(e.u, e.v)) continue;
      const Vertex a = to_top[static_cast<std::size_t>(e.u)];
      const Vertex b = to_top[static_cast<std::size_t>(e.v)];
      tree.edges.push_back({std::min(a, b), std::max(a, b), top.color(a, b)});
    }
    partition.trees.push_back(std::move(tree));

    int count = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (!std::binary_search(g1.vertices.begin(), g1.vertices.end(), v)) rest.push_back(v);
    if (!rest.empty()) {
      auto sub = restrict_to(cur, rest);
      std::vector<Vertex> sub_to_top;
      for (Vertex v : sub.maps.vertex_to_old) sub_to_top.push_back(to_top[static_cast<std::size_t>(v)]);
      count += run(sub.coloring, sub_to_top);
    }
    const auto bound = partition_number(n, r).value;
    if (count > bound)
      throw DefectError(level_message(std::to_string(count) + " trees exceed the bound " + std::to_string(bound), n, r),
                        format_coloring(top));
    return count;
  }
};

}  // namespace

RepresentativeSubgraph make_representative_subgraph(int n, std::vector<Edge> representative) {
  RepresentativeSubgraph s;
  s.representative = std::move(representative);
  Components comp(n);
  std::vector<bool> present(static_cast<std::size_t>(n), false);
  for (const auto& e : s.representative) {
    comp.unite(e.u, e.v);
    present[static_cast<std::size_t>(e.u)] = present[static_cast<std::size_t>(e.v)] = true;
  }
  std::vector<int> index_of_root(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    if (!present[static_cast<std::size_t>(v)]) continue;
    auto& idx = index_of_root[static_cast<std::size_t>(comp.find(v))];
    if (idx < 0) {
      idx = static_cast<int>(s.components.size());
      s.components.emplace_back();
    }
    s.components[static_cast<std::size_t>(idx)].vertices.push_back(v);
  }
  for (std::size_t i = 0; i < s.representative.size(); ++i) {
    const int idx = index_of_root[static_cast<std::size_t>(comp.find(s.representative[i].u))];
    s.components[static_cast<std::size_t>(idx)].colors.push_back(static_cast<Color>(i + 1));
  }
  // Components were created in order of smallest vertex; a stable sort keeps
  // that as the tie-break.
  std::stable_sort(s.components.begin(), s.components.end(),
                   [](const auto& a, const auto& b) { return a.vertices.size() > b.vertices.size(); });
  return s;
}

RepresentativeSubgraph initial_representatives(const EdgeColoring& c) {
  const int r = c.color_count();
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "initial_representatives: coloring has no colors");
  std::vector<Edge> rep(static_cast<std::size_t>(r));
  std::vector<bool> done(static_cast<std::size_t>(r), false);
  for (const auto& e : c.edges()) {  // lexicographic
    auto i = static_cast<std::size_t>(e.color - 1);
    if (!done[i]) {
      rep[i] = e.edge();
      done[i] = true;
    }
  }
  if (!std::all_of(done.begin(), done.end(), [](bool b) { return b; }))
    throw Error(ErrorCode::InvalidColoring, "initial_representatives: some color has no edge");
  return make_representative_subgraph(c.vertex_count(), std::move(rep));
}

std::optional<SwapMove> find_swap(const RepresentativeSubgraph& s, const EdgeColoring& c) {
  const int n = c.vertex_count();
  const int current = s.largest();
  if (current >= n) return std::nullopt;
  std::vector<std::vector<Edge>> by_color(s.representative.size() + 1);
  for (const auto& e : c.edges())
    if (e.color >= 1 && static_cast<std::size_t>(e.color) < by_color.size())
      by_color[static_cast<std::size_t>(e.color)].push_back(e.edge());

  std::vector<Edge> trial = s.representative;
  Components scratch(n);
  for (std::size_t i = 0; i < trial.size(); ++i) {
    const Edge old = trial[i];
    for (const Edge& g : by_color[i + 1]) {
      if (g == old) continue;
      trial[i] = g;
      const int after = largest_component(scratch, trial);
      if (after > current) return SwapMove{static_cast<Color>(i + 1), old, g, after};
    }
    trial[i] = old;
  }
  return std::nullopt;
}

RepresentativeSubgraph apply_swap(const RepresentativeSubgraph& s, const SwapMove& move, int n) {
  auto rep = s.representative;
  rep.at(static_cast<std::size_t>(move.color - 1)) = move.added;
  return make_representative_subgraph(n, std::move(rep));
}

ConstructResult partition_complete(const EdgeColoring& c) {
  require_valid(c);
  if (!c.complete()) throw Error(ErrorCode::InvalidArgument, "partition_complete: coloring is not of a complete graph");

  Builder b{c, {}, {}};
  std::vector<Vertex> identity(static_cast<std::size_t>(c.vertex_count()));
  std::iota(identity.begin(), identity.end(), 0);
  b.run(c, identity);

  ConstructResult out;
  out.partition = std::move(b.partition);
  normalize(out.partition);
  out.bound = static_cast<int>(partition_number(c.vertex_count(), c.color_count()).value);
  out.levels = std::move(b.levels);
  if (auto check = is_partition_valid(c, out.partition); !check)
    throw DefectError("constructive: produced an invalid partition: " + check.violation, format_coloring(c));
  return out;
}

}  // namespace htp
