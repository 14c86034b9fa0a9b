#include <gtest/gtest.h>

#include "htp/canonical.hpp"
#include "htp/error.hpp"
#include "htp/formula.hpp"
#include "oracles.hpp"

using namespace htp;

TEST(Canonical, FourThree) {
  const auto [c, layout] = generate_canonical(4, 3);
  EXPECT_EQ(layout.t, 2);
  EXPECT_EQ(layout.clique, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(layout.hub, 2);
  EXPECT_EQ(layout.extra, 3);
  EXPECT_EQ(layout.fill_color, 1);
  EXPECT_EQ(c, oracle::make(4, 3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}, {0, 3, 1}, {1, 3, 1}, {2, 3, 1}}));
  EXPECT_EQ(layout.hub_edges, (std::map<Color, Edge>{{2, {0, 2}}, {3, {1, 2}}}));
}

TEST(Canonical, FiveFourUsesTheUnusedColor) {
  const auto [c, layout] = generate_canonical(5, 4);
  EXPECT_EQ(layout.t, 2);
  EXPECT_EQ(layout.fill_color, 4);
  EXPECT_EQ(c.color(0, 1), 1);
  EXPECT_EQ(c.color(0, 2), 2);
  EXPECT_EQ(c.color(1, 2), 3);
  int fill = 0;
  for (const auto& e : c.edges()) fill += e.color == 4;
  EXPECT_EQ(fill, 7);
}

TEST(Canonical, RainbowWhenAllColorsUsed) {
  for (int n = 3; n <= 9; ++n) {
    const auto [c, layout] = generate_canonical(n, static_cast<int>(choose2(n)));
    EXPECT_EQ(layout.t, n - 1);
    EXPECT_FALSE(layout.extra);
    EXPECT_FALSE(layout.fill_color);
    EXPECT_EQ(static_cast<int>(layout.hub_edges.size()), n - 1);
    std::set<Color> colors;
    for (const auto& e : c.edges()) colors.insert(e.color);
    EXPECT_EQ(colors.size(), c.edge_count());
  }
}

TEST(Canonical, LayoutInvariants) {
  for (int n = 3; n <= 12; ++n)
    for (int r = 2; r <= choose2(n); ++r) {
      const auto [c, layout] = generate_canonical(n, r);
      const int t = static_cast<int>(threshold(r));
      ASSERT_TRUE(validate(c).empty()) << n << " " << r;
      ASSERT_TRUE(c.complete());
      EXPECT_EQ(layout.t, t);
      EXPECT_EQ(static_cast<int>(layout.clique.size()), t);
      EXPECT_EQ(layout.hub, t);
      EXPECT_EQ(layout.extra.has_value(), n >= t + 2);
      // clique colors are 1..C(t,2) in lexicographic order
      int next = 1;
      for (Vertex a = 0; a < t; ++a)
        for (Vertex b = a + 1; b < t; ++b) EXPECT_EQ(c.color(a, b), next++);
      // hub edges carry the leftover colors, one each
      const int leftover = std::min(r, static_cast<int>(choose2(t)) + t) - static_cast<int>(choose2(t));
      EXPECT_EQ(static_cast<int>(layout.hub_edges.size()), leftover);
      for (const auto& [color, e] : layout.hub_edges) EXPECT_EQ(c.color(e.u, e.v), color);
      // everything else is the fill color
      for (const auto& e : c.edges()) {
        const bool in_clique = e.v < t;
        const bool hub_edge = e.v == t && e.color > choose2(t);
        if (!in_clique && !hub_edge) EXPECT_EQ(e.color, layout.fill_color.value());
      }
    }
}

TEST(Canonical, FillOption) {
  const auto c = generate_canonical(4, 3, {.fill_when_exhausted = 3}).coloring;
  EXPECT_EQ(c.color(2, 3), 3);
  EXPECT_EQ(c.color(0, 3), 3);
  EXPECT_TRUE(validate(c).empty());
  // ignored when a color is left over
  EXPECT_EQ(generate_canonical(5, 4, {.fill_when_exhausted = 2}).layout.fill_color, 4);
  EXPECT_THROW(generate_canonical(4, 3, {.fill_when_exhausted = 4}), Error);
}

TEST(Canonical, Deterministic) {
  EXPECT_EQ(format_coloring(generate_canonical(9, 17).coloring), format_coloring(generate_canonical(9, 17).coloring));
}

TEST(Canonical, Rejections) {
  EXPECT_THROW(generate_canonical(2, 1), Error);
  EXPECT_THROW(generate_canonical(4, 1), Error);
  EXPECT_THROW(generate_canonical(4, 7), Error);
}

TEST(Canonical, RestrictedTailIsOneEdge) {
  const auto c = generate_canonical(5, 3).coloring;
  const Vertex keep[] = {3, 4};
  const auto res = restrict_to(c, keep);
  EXPECT_EQ(res.coloring.color_count(), 1);
  EXPECT_EQ(res.coloring.edge_count(), 1u);
}

TEST(Extremal, FiveThree) {
  const auto [c, layout] = generate_canonical(5, 3);
  const auto p = extremal_partition(c, layout);
  EXPECT_EQ(p.count(), 2);
  EXPECT_EQ(p.trees[0].vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(p.trees[0].edges, (std::vector<ColoredEdge>{{0, 2, 2}, {0, 3, 1}, {1, 2, 3}}));
  EXPECT_EQ(p.trees[1].vertices, (std::vector<Vertex>{4}));
}

TEST(Extremal, FourThreeAndEightFive) {
  auto canon = generate_canonical(4, 3);
  EXPECT_EQ(extremal_partition(canon.coloring, canon.layout).count(), 1);
  canon = generate_canonical(8, 5);
  const auto p = extremal_partition(canon.coloring, canon.layout);
  ASSERT_EQ(p.count(), 3);
  EXPECT_EQ(p.trees[0].vertices.size(), 5u);
  EXPECT_EQ(p.trees[1].vertices.size(), 2u);
  EXPECT_EQ(p.trees[2].vertices.size(), 1u);
}

TEST(Extremal, ValidAndTightEverywhere) {
  for (int n = 3; n <= 12; ++n)
    for (int r = 2; r <= choose2(n); ++r) {
      const auto [c, layout] = generate_canonical(n, r);
      const auto p = extremal_partition(c, layout);
      const auto check = is_partition_valid(c, p);
      ASSERT_TRUE(check) << n << " " << r << ": " << check.violation;
      EXPECT_EQ(p.count(), oracle::closed_form(n, r)) << n << " " << r;
    }
}
