#include <gtest/gtest.h>

#include <random>

#include "htp/canonical.hpp"
#include "htp/error.hpp"
#include "htp/solver.hpp"
#include "htp/verify.hpp"
#include "oracles.hpp"

using namespace htp;

namespace {

void expect_optimal(const EdgeColoring& c, const SolveResult& res) {
  const auto check = is_partition_valid(c, res.partition);
  EXPECT_TRUE(check) << check.violation;
  EXPECT_EQ(res.partition.count(), res.count);
}

}  // namespace

TEST(Solve, MonochromaticTriangle) {
  const auto c = oracle::monochromatic(3);
  const auto res = solve(c);
  EXPECT_EQ(res.count, 2);
  expect_optimal(c, res);
}

TEST(Solve, CanonicalExamples) {
  EXPECT_EQ(solve(generate_canonical(4, 3).coloring).count, 1);
  EXPECT_EQ(solve(generate_canonical(5, 3).coloring).count, 2);
  EXPECT_EQ(solve(generate_canonical(6, 5).coloring).count, 2);
}

TEST(Solve, MonochromaticIsHalf) {
  for (int n = 1; n <= 10; ++n) {
    const auto c = oracle::monochromatic(n);
    const auto res = solve(c);
    EXPECT_EQ(res.count, (n + 1) / 2) << n;
    expect_optimal(c, res);
  }
}

TEST(Solve, Guard) {
  const auto c = oracle::monochromatic(15);
  EXPECT_THROW(solve(c), GuardError);
  EXPECT_EQ(solve(c, {.max_vertices = 15}).count, 8);
  EXPECT_THROW(solve(oracle::monochromatic(25), {.max_vertices = 30}), GuardError);
}

TEST(Solve, RejectsInvalidColoring) {
  EXPECT_THROW(solve(oracle::make(3, 3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 2}})), Error);
}

// Reconstruction picks the numerically smallest block mask among optimal
// choices; for the monochromatic K4 that pairs 0 with 1.
TEST(Solve, TieBreak) {
  const auto res = solve(oracle::monochromatic(4));
  ASSERT_EQ(res.count, 2);
  EXPECT_EQ(res.partition.trees[0].vertices, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(res.partition.trees[1].vertices, (std::vector<Vertex>{2, 3}));
}

TEST(Solve, NonCompleteHost) {
  // path 0-1-2-3 colored 1,1,2 plus isolated vertex 4
  const auto c = oracle::make(5, 2, {{0, 1, 1}, {1, 2, 1}, {2, 3, 2}});
  const auto res = solve(c);
  EXPECT_EQ(res.count, 3);
  expect_optimal(c, res);
}

TEST(Solve, StatsAreCounted) {
  const auto res = solve(generate_canonical(8, 6).coloring);
  EXPECT_GT(res.stats.subsets_explored, 0u);
  EXPECT_GT(res.stats.feasibility_checks, 0u);
}

TEST(Bruteforce, Examples) {
  EXPECT_EQ(solve_bruteforce(oracle::rainbow(5)), 1);
  EXPECT_EQ(solve_bruteforce(oracle::monochromatic(4)), 2);
  EXPECT_EQ(solve_bruteforce(generate_canonical(6, 5).coloring), 2);
  EXPECT_THROW(solve_bruteforce(oracle::monochromatic(8)), GuardError);
}

TEST(Solve, AgreesWithBruteforceAndForestOracle) {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 150; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int m = static_cast<int>(choose2(n));
    const int r = m == 0 ? 0 : 1 + static_cast<int>(rng() % static_cast<unsigned>(m));
    const auto c = n == 1 ? oracle::monochromatic(1) : random_surjective_coloring(n, r, rng);
    const auto res = solve(c);
    expect_optimal(c, res);
    EXPECT_EQ(res.count, solve_bruteforce(c)) << format_coloring(c);
    EXPECT_EQ(res.count, oracle::forest_partition_count(c)) << format_coloring(c);
    EXPECT_LE(res.count, (n + 1) / 2);
    EXPECT_GE(res.count, 1);
    if (n >= 2) EXPECT_LE(res.count, oracle::closed_form(n, r));
  }
}

TEST(Solve, MergeNeverHelps) {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 150; ++i) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int r = 2 + static_cast<int>(rng() % static_cast<unsigned>(choose2(n) - 1));
    const auto c = random_surjective_coloring(n, r, rng);
    const int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(r));
    int b = 1 + static_cast<int>(rng() % static_cast<unsigned>(r - 1));
    if (b >= a) ++b;
    EXPECT_LE(solve(c).count, solve(merge_colors(c, a, b)).count);
  }
}
