#include <algorithm>
#include <numeric>

#include "htp/error.hpp"
#include "htp/formula.hpp"
#include "htp/verify.hpp"

namespace htp {

namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return pairs;
}

EdgeColoring from_labels(int n, int r, const std::vector<Edge>& pairs, const std::vector<int>& labels) {
  std::vector<ColoredEdge> edges(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) edges[i] = {pairs[i].u, pairs[i].v, labels[i]};
  return EdgeColoring(n, r, std::move(edges), true);
}

}  // namespace

EdgeColoring random_surjective_coloring(int n, int r, std::mt19937_64& rng) {
  const auto pairs = all_pairs(n);
  const auto m = static_cast<int>(pairs.size());
  if (r < 1 || r > m)
    throw Error(ErrorCode::InvalidArgument,
                "random coloring: r must lie in 1.." + std::to_string(m) + " for n = " + std::to_string(n));
  std::uniform_int_distribution<int> color(1, r);
  std::vector<int> labels(pairs.size());
  std::vector<bool> seen(static_cast<std::size_t>(r) + 1);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::fill(seen.begin(), seen.end(), false);
    int distinct = 0;
    for (auto& l : labels) {
      l = color(rng);
      if (!seen[static_cast<std::size_t>(l)]) {
        seen[static_cast<std::size_t>(l)] = true;
        ++distinct;
      }
    }
    if (distinct == r) return from_labels(n, r, pairs, labels);
  }
  // Repair: r random edges take the r colors, in random order.
  std::vector<int> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> palette(static_cast<std::size_t>(r));
  std::iota(palette.begin(), palette.end(), 1);
  std::shuffle(palette.begin(), palette.end(), rng);
  for (int i = 0; i < r; ++i) labels[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = palette[static_cast<std::size_t>(i)];
  return from_labels(n, r, pairs, labels);
}

void for_each_surjective_coloring(int n, int r, const std::function<void(const EdgeColoring&)>& fn) {
  const auto pairs = all_pairs(n);
  const std::size_t m = pairs.size();
  if (r < 1 || r > static_cast<int>(m)) return;
  std::vector<int> labels(m, 1);
  std::vector<int> uses(static_cast<std::size_t>(r) + 1, 0);
  uses[1] = static_cast<int>(m);
  int distinct = 1;
  while (true) {
    if (distinct == r) fn(from_labels(n, r, pairs, labels));
    // Odometer step, tracking how often each color is used.
    std::size_t i = 0;
    for (; i < m; ++i) {
      auto& l = labels[i];
      if (--uses[static_cast<std::size_t>(l)] == 0) --distinct;
      l = l == r ? 1 : l + 1;
      if (uses[static_cast<std::size_t>(l)]++ == 0) ++distinct;
      if (l != 1) break;
    }
    if (i == m) break;
  }
}

void for_each_coloring_up_to_relabel(int n, int r, const std::function<void(const EdgeColoring&)>& fn) {
  const auto pairs = all_pairs(n);
  const int m = static_cast<int>(pairs.size());
  if (m == 0 || r > m) return;
  std::vector<int> labels(static_cast<std::size_t>(m), 0);
  auto visit = [&](auto&& self, int i, int used) -> void {
    if (i == m) {
      if (r == 0 || used == r) fn(from_labels(n, used, pairs, labels));
      return;
    }
    const int top = r == 0 ? used + 1 : std::min(used + 1, r);
    for (int l = 1; l <= top; ++l) {
      const int next_used = std::max(used, l);
      if (r != 0 && next_used + (m - i - 1) < r) continue;
      labels[static_cast<std::size_t>(i)] = l;
      self(self, i + 1, next_used);
    }
  };
  visit(visit, 0, 0);
}

std::vector<int> sampled_color_counts(int n) {
  const auto m = static_cast<int>(choose2(n));
  std::vector<int> out;
  if (m <= 15) {
    for (int r = 2; r <= m; ++r) out.push_back(r);
    return out;
  }
  for (int t = 1; color_range(t).min <= m; ++t) {
    const auto range = color_range(t);
    out.push_back(static_cast<int>(range.min));
    out.push_back(static_cast<int>(std::min<std::int64_t>(range.max, m)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace htp
