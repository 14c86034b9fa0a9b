#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "htp/coloring.hpp"

namespace htp {

// Instance generators shared by the campaigns and the tests.

/// Uniform color per edge of K_n, redrawn until all r colors occur. After 100
/// rejections in a row, r random edges are forced to take the r colors.
EdgeColoring random_surjective_coloring(int n, int r, std::mt19937_64& rng);

/// Every surjective map from the C(n,2) edges of K_n onto 1..r.
void for_each_surjective_coloring(int n, int r, const std::function<void(const EdgeColoring&)>& fn);

/// One coloring of K_n per partition of its edges into color classes, colors
/// numbered by first appearance. Covers every r-edge-coloring up to
/// relabeling the colors. With r > 0 only colorings using exactly r colors
/// are produced.
void for_each_coloring_up_to_relabel(int n, int r, const std::function<void(const EdgeColoring&)>& fn);

/// Color counts sampled by the randomized campaigns: both ends of every
/// threshold range up to C(n,2), or every r when C(n,2) is at most 15.
std::vector<int> sampled_color_counts(int n);

struct CellRecord {
  std::string label;
  int n = 0;
  int r = 0;
  std::int64_t instances = 0;
  std::int64_t failures = 0;
  int max_observed = 0;
  int formula = 0;
  double max_ms = 0;  // slowest single instance; not part of the summary
};

struct FailureRecord {
  std::string cell;
  std::string message;
  std::string coloring;   // coloring file contents
  std::string reproduce;  // CLI invocation, with FILE standing for the saved coloring
};

struct Witness {
  std::string cell;
  std::string description;
  int value = 0;
  std::string coloring;
};

struct VerificationReport {
  std::string campaign;
  std::map<std::string, std::string> parameters;
  std::int64_t instances = 0;
  std::vector<CellRecord> cells;
  std::vector<FailureRecord> failures;
  std::vector<Witness> witnesses;
  double wall_ms = 0;

  bool passed() const noexcept { return failures.empty(); }
};

std::string report_to_text(const VerificationReport& report);
/// Full report, wall-clock included.
std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(std::string_view json);
/// One JSON record per cell plus a closing totals record. Deterministic for
/// fixed parameters.
std::string report_summary(const VerificationReport& report);

struct CampaignOptions {
  int max_n = 6;
  int samples = 200;
  std::uint64_t seed = 42;
  int threads = 0;  // 0 = hardware concurrency
};

/// Closed form vs exact solver: canonical colorings (equality, also with a
/// second fill color), random colorings (upper bound), exhaustive n = 3, 4
/// (maximum equals the closed form) and n = 5 up to relabeling.
VerificationReport campaign_theorem1(const CampaignOptions& options);

/// solve(c) <= solve(merge_colors(c, a, b)) on random trials with n <= max_n.
/// options.samples is the trial count.
VerificationReport campaign_monotonicity(const CampaignOptions& options);

/// Every connected simple graph on up to max_n vertices with a bridge has at
/// most C(n-1,2)+1 edges; a tight witness is recorded for each n >= 3.
VerificationReport campaign_cutedge(const CampaignOptions& options);

/// Constructive partitions: exhaustive small cases, the canonical family and
/// random samples for n up to max_n.
VerificationReport campaign_constructive(const CampaignOptions& options);

/// Dispatch by name: theorem1, monotonicity, cutedge, constructive.
VerificationReport run_campaign(std::string_view name, const CampaignOptions& options);

}  // namespace htp
