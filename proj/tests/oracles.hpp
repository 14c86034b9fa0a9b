#pragma once

// Independent reference implementations used only by the tests. None of
// them calls into the rainbow or solver modules.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "htp/coloring.hpp"

namespace oracle {

using htp::EdgeColoring;

inline std::int64_t c2(std::int64_t x) { return x * (x - 1) / 2; }

// f(r) by walking t upward until the bracketing inequality holds.
inline std::int64_t scan_threshold(std::int64_t r) {
  for (std::int64_t t = 1;; ++t)
    if (c2(t) + 2 <= r && r <= c2(t + 1) + 1) return t;
}

inline std::int64_t closed_form(std::int64_t n, std::int64_t r) {
  if (n == 1) return 1;
  if (r == 1) return (n + 1) / 2;
  return (n - scan_threshold(r) + 1) / 2;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

// Largest edge subset that is acyclic with pairwise distinct colors, by
// walking all 2^m subsets of the induced edges.
inline int max_rainbow_forest(const EdgeColoring& c, const std::vector<int>& within) {
  std::vector<htp::ColoredEdge> es;
  for (const auto& e : c.edges())
    if (std::count(within.begin(), within.end(), e.u) && std::count(within.begin(), within.end(), e.v)) es.push_back(e);
  const auto m = es.size();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k <= best) continue;
    Dsu d(c.vertex_count());
    std::vector<int> used;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (std::count(used.begin(), used.end(), es[i].color)) ok = false;
      used.push_back(es[i].color);
      if (ok && !d.unite(es[i].u, es[i].v)) ok = false;
    }
    if (ok) best = k;
  }
  return best;
}

// n minus the largest spanning forest whose every component is rainbow. A
// partition into k rainbow trees is such a forest with n-k edges, and every
// such forest splits into its components, so this is the exact count.
inline int forest_partition_count(const EdgeColoring& c) {
  const auto& es = c.edges();
  const auto m = es.size();
  const int n = c.vertex_count();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k <= best) continue;
    Dsu d(n);
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      if (mask >> i & 1u) ok = d.unite(es[i].u, es[i].v);
    if (!ok) continue;
    // Colors per component must be distinct.
    std::vector<std::vector<int>> colors(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      auto& bag = colors[static_cast<std::size_t>(d.find(es[i].u))];
      if (std::count(bag.begin(), bag.end(), es[i].color)) ok = false;
      bag.push_back(es[i].color);
    }
    if (ok) best = k;
  }
  return n - best;
}

inline EdgeColoring monochromatic(int n) {
  if (n == 1) return EdgeColoring(1, 0, {}, true);
  return EdgeColoring::complete_from(n, 1, [](int, int) { return 1; });
}

inline EdgeColoring rainbow(int n) {
  int next = 0;
  return EdgeColoring::complete_from(n, static_cast<int>(c2(n)), [&](int, int) { return ++next; });
}

// Edge list "u v c" triples for hand-written fixtures.
inline EdgeColoring make(int n, int r, std::initializer_list<htp::ColoredEdge> edges) {
  std::vector<htp::ColoredEdge> v(edges);
  const bool complete = static_cast<std::int64_t>(v.size()) == c2(n);
  return EdgeColoring(n, r, std::move(v), complete);
}

}  // namespace oracle
