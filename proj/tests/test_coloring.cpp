#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "htp/error.hpp"
#include "htp/verify.hpp"
#include "oracles.hpp"

using namespace htp;
using oracle::make;

namespace {

const EdgeColoring kRainbow3 = make(3, 3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}});

Tree tree(std::vector<Vertex> vs, std::vector<ColoredEdge> es) { return {std::move(vs), std::move(es)}; }

}  // namespace

TEST(Validate, RainbowTriangleIsClean) { EXPECT_TRUE(validate(kRainbow3).empty()); }

TEST(Validate, UnusedColorIsReported) {
  const auto c = make(3, 3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 2}});
  EXPECT_EQ(validate(c), (std::vector<Violation>{{ViolationKind::MissingColor, 3}}));
}

TEST(Validate, CompleteFlagNeedsEveryPair) {
  const EdgeColoring c(4, 1, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}}, true);
  const auto v = validate(c);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::IncompleteGraph);
}

TEST(Validate, StructuralProblems) {
  const EdgeColoring c(3, 2, {{0, 1, 1}, {1, 0, 2}, {0, 3, 2}, {1, 2, 7}}, false);
  std::vector<ViolationKind> kinds;
  for (const auto& v : validate(c)) kinds.push_back(v.kind);
  EXPECT_NE(std::find(kinds.begin(), kinds.end(), ViolationKind::BadVertex), kinds.end());
  EXPECT_NE(std::find(kinds.begin(), kinds.end(), ViolationKind::BadColor), kinds.end());
  EXPECT_THROW(require_valid(c), Error);
}

TEST(Validate, DuplicatePair) {
  const EdgeColoring c(3, 1, {{0, 1, 1}, {0, 1, 1}}, false);
  const auto v = validate(c);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, ViolationKind::DuplicateEdge);
}

TEST(Validate, SingleVertex) {
  EXPECT_TRUE(validate(EdgeColoring(1, 0, {}, true)).empty());
  EXPECT_FALSE(validate(EdgeColoring(2, 0, {}, false)).empty());
}

TEST(PartitionValid, SpanningStarOnRainbowTriangle) {
  TreePartition p{{tree({0, 1, 2}, {{0, 1, 1}, {0, 2, 2}})}};
  EXPECT_TRUE(is_partition_valid(kRainbow3, p));
}

TEST(PartitionValid, RepeatedColorInsideTree) {
  const auto mono = oracle::monochromatic(3);
  TreePartition p{{tree({0, 1, 2}, {{0, 1, 1}, {1, 2, 1}})}};
  const auto check = is_partition_valid(mono, p);
  EXPECT_FALSE(check);
  EXPECT_NE(check.violation.find("color"), std::string::npos) << check.violation;
}

TEST(PartitionValid, ReusedVertex) {
  const auto mono = oracle::monochromatic(4);
  TreePartition p{{tree({0, 1}, {{0, 1, 1}}), tree({1, 2, 3}, {{1, 2, 1}, {2, 3, 1}})}};
  EXPECT_FALSE(is_partition_valid(mono, p));
}

TEST(PartitionValid, OtherViolations) {
  const auto mono = oracle::monochromatic(3);
  // uncovered vertex
  EXPECT_FALSE(is_partition_valid(mono, TreePartition{{tree({0, 1}, {{0, 1, 1}})}}));
  // wrong recorded color
  EXPECT_FALSE(is_partition_valid(mono, TreePartition{{tree({0, 1}, {{0, 1, 2}}), tree({2}, {})}}));
  // edge leaves its tree
  EXPECT_FALSE(is_partition_valid(mono, TreePartition{{tree({0, 1}, {{0, 2, 1}}), tree({2}, {})}}));
  // disconnected
  EXPECT_FALSE(is_partition_valid(mono, TreePartition{{tree({0, 1, 2}, {{0, 1, 1}})}}));
  EXPECT_TRUE(is_partition_valid(mono, TreePartition{{tree({0}, {}), tree({1, 2}, {{1, 2, 1}})}}));
}

TEST(Merge, RainbowTriangleThreeIntoTwo) {
  const auto m = merge_colors(kRainbow3, 3, 2);
  EXPECT_EQ(m, make(3, 2, {{0, 1, 1}, {0, 2, 2}, {1, 2, 2}}));
  EXPECT_TRUE(validate(m).empty());
}

TEST(Merge, DownToMonochromatic) {
  const auto c = make(3, 2, {{0, 1, 1}, {0, 2, 2}, {1, 2, 2}});
  EXPECT_EQ(merge_colors(c, 2, 1), oracle::monochromatic(3));
}

TEST(Merge, RenumbersColorsAboveSource) {
  const auto m = merge_colors(oracle::rainbow(4), 2, 5);
  EXPECT_EQ(m.color_count(), 5);
  EXPECT_EQ(m.color(0, 1), 1);
  EXPECT_EQ(m.color(0, 2), 4);  // was 2, now the old 5
  EXPECT_EQ(m.color(1, 3), 4);
  EXPECT_EQ(m.color(0, 3), 2);
  EXPECT_EQ(m.color(2, 3), 5);
}

TEST(Merge, RejectsBadColors) {
  EXPECT_THROW(merge_colors(kRainbow3, 2, 2), Error);
  EXPECT_THROW(merge_colors(kRainbow3, 0, 2), Error);
  EXPECT_THROW(merge_colors(kRainbow3, 1, 4), Error);
}

TEST(Merge, AlwaysValid) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int m = static_cast<int>(choose2(n));
    if (m < 2) continue;
    const int r = 2 + static_cast<int>(rng() % static_cast<unsigned>(m - 1));
    const auto c = random_surjective_coloring(n, r, rng);
    const int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(r));
    int b = 1 + static_cast<int>(rng() % static_cast<unsigned>(r - 1));
    if (b >= a) ++b;
    const auto merged = merge_colors(c, a, b);
    EXPECT_TRUE(validate(merged).empty());
    EXPECT_EQ(merged.color_count(), r - 1);
  }
}

TEST(Restrict, RainbowK4ToTriangle) {
  const Vertex keep[] = {0, 1, 2};
  const auto res = restrict_to(oracle::rainbow(4), keep);
  EXPECT_EQ(res.coloring, make(3, 3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}}));
  EXPECT_EQ(res.maps.color_to_old, (std::vector<Color>{1, 2, 4}));
  EXPECT_EQ(res.maps.color_from_old, (std::vector<Color>{1, 2, 0, 3, 0, 0}));
}

TEST(Restrict, EverythingKeptIsIdentity) {
  std::mt19937_64 rng(3);
  const auto c = random_surjective_coloring(6, 7, rng);
  const Vertex keep[] = {5, 4, 3, 2, 1, 0, 3};
  const auto res = restrict_to(c, keep);
  EXPECT_EQ(res.coloring, c);
  EXPECT_EQ(res.maps.vertex_to_old, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(res.maps.color_to_old, (std::vector<Color>{1, 2, 3, 4, 5, 6, 7}));
}

TEST(Restrict, ComposesWithItself) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(choose2(n)));
    const auto c = random_surjective_coloring(n, r, rng);
    std::vector<Vertex> a, b_old;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 3 != 0) a.push_back(v);
    if (a.empty()) a.push_back(0);
    const auto first = restrict_to(c, a);
    std::vector<Vertex> b_new;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (rng() % 2 == 0) {
        b_new.push_back(static_cast<Vertex>(j));
        b_old.push_back(a[j]);
      }
    if (b_new.empty()) {
      b_new.push_back(0);
      b_old.push_back(a[0]);
    }
    const auto twice = restrict_to(first.coloring, b_new);
    const auto direct = restrict_to(c, b_old);
    EXPECT_EQ(twice.coloring, direct.coloring);
    for (std::size_t j = 0; j < b_new.size(); ++j)
      EXPECT_EQ(first.maps.vertex_to_old[static_cast<std::size_t>(twice.maps.vertex_to_old[j])], direct.maps.vertex_to_old[j]);
    for (std::size_t j = 0; j < twice.maps.color_to_old.size(); ++j)
      EXPECT_EQ(first.maps.color_to_old[static_cast<std::size_t>(twice.maps.color_to_old[j] - 1)], direct.maps.color_to_old[j]);
  }
}

TEST(Format, ParseRoundTrip) {
  std::mt19937_64 rng(5);
  const auto c = random_surjective_coloring(7, 9, rng);
  EXPECT_EQ(parse_coloring(format_coloring(c)), c);
}

TEST(Format, CommentsAnyOrderAndIncomplete) {
  const auto c = parse_coloring("# triangle minus one\n3 2\n\n1 2 2\n# note\n0 1 1\n");
  EXPECT_EQ(c.vertex_count(), 3);
  EXPECT_FALSE(c.complete());
  EXPECT_EQ(c.color(2, 1), 2);
  EXPECT_EQ(c.color(0, 2), 0);
  EXPECT_TRUE(parse_coloring("3 3\n1 2 3\n0 2 2\n0 1 1\n").complete());
}

TEST(Format, ErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) {
    try {
      parse_coloring(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("3 2\n0 1 1\n0 2 x\n"), 3);
  EXPECT_EQ(line_of("3 2\n0 1 1\n# c\n1 0 2\n"), 4);      // u > v
  EXPECT_EQ(line_of("3 2\n0 1 1\n0 2 3\n"), 3);           // color out of range
  EXPECT_EQ(line_of("3 2\n0 1 1\n0 1 2\n"), 3);           // duplicate
  EXPECT_EQ(line_of("3\n"), 1);
  EXPECT_EQ(line_of("3 2\n0 1 1 9\n"), 2);
}

TEST(Format, LoadAndSave) {
  const auto path = (std::filesystem::temp_directory_path() / "htp_test_coloring.txt").string();
  save_coloring(kRainbow3, path);
  EXPECT_EQ(load_coloring(path), kRainbow3);
  std::filesystem::remove(path);
  EXPECT_THROW(load_coloring(path), Error);
}

TEST(Format, PartitionRoundTrip) {
  const auto c = oracle::rainbow(5);
  TreePartition p{{tree({0, 2, 4}, {{0, 2, c.color(0, 2)}, {2, 4, c.color(2, 4)}}), tree({1, 3}, {{1, 3, c.color(1, 3)}})}};
  const auto text = format_partition(p);
  EXPECT_EQ(text, "tree 0 2 4 ; edges (0,2) (2,4)\ntree 1 3 ; edges (1,3)\n");
  EXPECT_EQ(parse_partition(c, text), p);
  EXPECT_EQ(parse_partition(c, "tree 3 ; edges\n").trees[0], tree({3}, {}));
  EXPECT_THROW(parse_partition(c, "tree 0 1 ; edges (0,9)\n"), ParseError);
  EXPECT_THROW(parse_partition(c, "forest 0\n"), ParseError);
}
