#include "htp/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "htp/error.hpp"
#include "htp/rainbow.hpp"

namespace htp {

namespace {

constexpr int kHardVertexLimit = 24;

std::vector<Vertex> members(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

class BlockOracle {
 public:
  BlockOracle(const EdgeColoring& c, SolveStats& stats)
      : c_(c), stats_(stats), cache_(std::size_t{1} << c.vertex_count(), kUnknown) {}

  bool feasible(std::uint32_t block) {
    auto& slot = cache_[block];
    if (slot != kUnknown) {
      ++stats_.cache_hits;
      return slot == kYes;
    }
    ++stats_.feasibility_checks;
    const int k = std::popcount(block);
    bool ok = true;
    if (k > 1) ok = k - 1 <= c_.color_count() && has_rainbow_spanning_tree(c_, members(block));
    slot = ok ? kYes : kNo;
    return ok;
  }

 private:
  static constexpr std::int8_t kUnknown = -1;
  static constexpr std::int8_t kNo = 0;
  static constexpr std::int8_t kYes = 1;

  const EdgeColoring& c_;
  SolveStats& stats_;
  std::vector<std::int8_t> cache_;
};

}  // namespace

SolveResult solve(const EdgeColoring& c, const SolveOptions& options) {
  require_valid(c);
  const int n = c.vertex_count();
  if (n > options.max_vertices || n > kHardVertexLimit)
    throw GuardError("solve: n = " + std::to_string(n) + " exceeds the vertex guard " +
                     std::to_string(std::min(options.max_vertices, kHardVertexLimit)));

  SolveResult result;
  BlockOracle oracle(c, result.stats);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint8_t> dp(std::size_t{full} + 1, 0);

  // dp[M] = fewest blocks covering M; every block holds the lowest vertex of
  // what is left, and larger blocks are tried first so pruning bites early.
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t block = low | sub;
      ++result.stats.subsets_explored;
      const int cand = dp[mask ^ block] + 1;
      if (cand < best && oracle.feasible(block)) {
        best = cand;
        if (best == 1) break;
      }
      if (sub == 0) break;
    }
    dp[mask] = static_cast<std::uint8_t>(best);
  }
  result.count = dp[full];

  // Reconstruction takes the numerically smallest optimal block at each step.
  for (std::uint32_t mask = full; mask != 0;) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    std::uint32_t chosen = 0;
    for (std::uint32_t sub = 0;; sub = (sub - rest) & rest) {
      const std::uint32_t block = low | sub;
      if (dp[mask ^ block] + 1 == dp[mask] && oracle.feasible(block)) {
        chosen = block;
        break;
      }
      if (sub == rest) break;
    }
    if (chosen == 0) throw DefectError("solve: reconstruction found no optimal block", format_coloring(c));
    const auto vertices = members(chosen);
    Tree tree{vertices, {}};
    if (vertices.size() > 1) {
      auto span_tree = rainbow_spanning_tree(c, vertices);
      if (!span_tree) throw DefectError("solve: feasible block lost its spanning tree", format_coloring(c));
      tree.edges = std::move(span_tree->edges);
    }
    result.partition.trees.push_back(std::move(tree));
    mask ^= chosen;
  }
  return result;
}

int solve_bruteforce(const EdgeColoring& c) {
  require_valid(c);
  const int n = c.vertex_count();
  if (n > kBruteforceVertexLimit)
    throw GuardError("solve_bruteforce: n = " + std::to_string(n) + " exceeds " +
                     std::to_string(kBruteforceVertexLimit));

  std::vector<std::int8_t> ok(std::size_t{1} << n, -1);
  auto block_ok = [&](std::uint32_t block) {
    auto& slot = ok[block];
    if (slot < 0) {
      const auto vs = members(block);
      slot = max_rainbow_forest_bruteforce(c, vs) + 1 == static_cast<int>(vs.size()) ? 1 : 0;
    }
    return slot == 1;
  };

  // Restricted growth strings enumerate every set partition once.
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  int best = n;
  auto visit = [&](auto&& self, int v, int blocks) -> void {
    if (blocks >= best) return;
    if (v == n) {
      std::vector<std::uint32_t> masks(static_cast<std::size_t>(blocks), 0);
      for (int i = 0; i < n; ++i) masks[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] |= 1u << i;
      if (std::all_of(masks.begin(), masks.end(), block_ok)) best = blocks;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[static_cast<std::size_t>(v)] = b;
      self(self, v + 1, std::max(blocks, b + 1));
    }
  };
  visit(visit, 0, 0);
  return best;
}

}  // namespace htp
