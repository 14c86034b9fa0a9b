#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>

#include "htp/canonical.hpp"
#include "htp/constructive.hpp"
#include "htp/error.hpp"
#include "htp/formula.hpp"
#include "htp/solver.hpp"
#include "htp/verify.hpp"

namespace htp {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct CellOutcome {
  CellRecord cell;
  std::vector<FailureRecord> failures;
  std::vector<Witness> witnesses;

  void fail(std::string message, const std::string& coloring, std::string reproduce) {
    ++cell.failures;
    failures.push_back({cell.label, std::move(message), coloring, std::move(reproduce)});
  }
  void witness(std::string description, int value, std::string coloring) {
    witnesses.push_back({cell.label, std::move(description), value, std::move(coloring)});
  }
};

using Job = std::function<CellOutcome()>;

// Cells are independent; results are collected in job order so the report
// does not depend on scheduling.
std::vector<CellOutcome> run_jobs(const std::vector<Job>& jobs, int threads) {
  std::vector<CellOutcome> out(jobs.size());
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads) : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(jobs.size(), 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size() && !failed;) {
      try {
        out[i] = jobs[i]();
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

VerificationReport assemble(std::string campaign, std::map<std::string, std::string> parameters,
                            std::vector<CellOutcome> outcomes, Clock::time_point start) {
  VerificationReport report;
  report.campaign = std::move(campaign);
  report.parameters = std::move(parameters);
  for (auto& o : outcomes) {
    report.instances += o.cell.instances;
    report.cells.push_back(std::move(o.cell));
    std::move(o.failures.begin(), o.failures.end(), std::back_inserter(report.failures));
    std::move(o.witnesses.begin(), o.witnesses.end(), std::back_inserter(report.witnesses));
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

std::mt19937_64 cell_rng(std::uint64_t seed, std::uint32_t tag, int n, int r) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), tag,
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r)};
  return std::mt19937_64(seq);
}

std::string label(const std::string& kind, int n, int r = 0) {
  std::string s = kind + " n=" + std::to_string(n);
  if (r > 0) s += " r=" + std::to_string(r);
  return s;
}

int formula_value(int n, int r) { return static_cast<int>(partition_number(n, r).value); }

void require_range(const char* what, int value, int lo, int hi) {
  if (value < lo || value > hi)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must lie in " + std::to_string(lo) + ".." +
                                                std::to_string(hi) + ", got " + std::to_string(value));
}

std::map<std::string, std::string> describe(const CampaignOptions& o, bool with_samples, bool with_seed) {
  std::map<std::string, std::string> p{{"max_n", std::to_string(o.max_n)}};
  if (with_samples) p["samples"] = std::to_string(o.samples);
  if (with_seed) p["seed"] = std::to_string(o.seed);
  return p;
}

// Maximum of solve() over a family must equal the closed form.
template <typename Enumerate>
CellOutcome exhaustive_max_cell(const std::string& name, int n, int r, Enumerate&& enumerate) {
  CellOutcome o;
  o.cell = {name, n, r, 0, 0, 0, formula_value(n, r), 0};
  std::string argmax;
  enumerate([&](const EdgeColoring& c) {
    ++o.cell.instances;
    const int v = solve(c).count;
    if (v > o.cell.max_observed) {
      o.cell.max_observed = v;
      argmax = format_coloring(c);
    }
  });
  if (o.cell.max_observed > o.cell.formula) {
    o.fail("maximum solve count " + std::to_string(o.cell.max_observed) + " exceeds closed form " +
               std::to_string(o.cell.formula),
           argmax, "htp solve FILE");
  } else if (o.cell.max_observed < o.cell.formula) {
    o.fail("no coloring attains the closed form " + std::to_string(o.cell.formula) + " (maximum " +
               std::to_string(o.cell.max_observed) + ")",
           argmax, "htp solve FILE");
  } else {
    o.witness("coloring attaining the maximum", o.cell.max_observed, argmax);
  }
  return o;
}

}  // namespace

VerificationReport campaign_theorem1(const CampaignOptions& options) {
  require_range("max_n", options.max_n, 3, 10);
  require_range("samples", options.samples, 0, 1'000'000);
  const auto start = Clock::now();
  std::vector<Job> jobs;

  for (int n = 3; n <= options.max_n; ++n)
    for (int r = 2; r <= choose2(n); ++r)
      jobs.push_back([n, r] {
        CellOutcome o;
        o.cell = {label("canonical", n, r), n, r, 0, 0, 0, formula_value(n, r), 0};
        auto check = [&](const EdgeColoring& c, const std::string& variant) {
          ++o.cell.instances;
          const int v = solve(c).count;
          o.cell.max_observed = std::max(o.cell.max_observed, v);
          if (v != o.cell.formula)
            o.fail(variant + ": solve count " + std::to_string(v) + " differs from closed form " +
                       std::to_string(o.cell.formula),
                   format_coloring(c), "htp solve FILE");
          else if (variant == "canonical")
            o.witness("canonical coloring", v, format_coloring(c));
        };
        const auto canon = generate_canonical(n, r);
        check(canon.coloring, "canonical");
        // The fill color is a free choice when no color is left over.
        if (canon.layout.fill_color == 1 && r > 1) {
          check(generate_canonical(n, r, {.fill_when_exhausted = r}).coloring,
                "canonical with fill color " + std::to_string(r));
        }
        return o;
      });

  for (int n = 3; n <= options.max_n; ++n)
    for (int r : sampled_color_counts(n))
      jobs.push_back([n, r, &options] {
        CellOutcome o;
        o.cell = {label("random", n, r), n, r, 0, 0, 0, formula_value(n, r), 0};
        auto rng = cell_rng(options.seed, 1, n, r);
        bool witnessed = false;
        for (int i = 0; i < options.samples; ++i) {
          const auto c = random_surjective_coloring(n, r, rng);
          ++o.cell.instances;
          const int v = solve(c).count;
          o.cell.max_observed = std::max(o.cell.max_observed, v);
          if (v > o.cell.formula) {
            o.fail("solve count " + std::to_string(v) + " exceeds closed form " + std::to_string(o.cell.formula),
                   format_coloring(c), "htp solve FILE");
          } else if (v == o.cell.formula && !witnessed) {
            o.witness("random coloring attaining the closed form", v, format_coloring(c));
            witnessed = true;
          }
        }
        return o;
      });

  for (int n = 3; n <= std::min(options.max_n, 4); ++n)
    for (int r = 2; r <= choose2(n); ++r)
      jobs.push_back([n, r] {
        return exhaustive_max_cell(label("exhaustive", n, r), n, r,
                                   [&](auto&& fn) { for_each_surjective_coloring(n, r, fn); });
      });
  if (options.max_n >= 5)
    for (int r = 2; r <= 10; ++r)
      jobs.push_back([r] {
        return exhaustive_max_cell(label("relabel-exhaustive", 5, r), 5, r,
                                   [&](auto&& fn) { for_each_coloring_up_to_relabel(5, r, fn); });
      });

  return assemble("theorem1", describe(options, true, true), run_jobs(jobs, options.threads), start);
}

VerificationReport campaign_monotonicity(const CampaignOptions& options) {
  require_range("max_n", options.max_n, 3, 7);
  require_range("samples", options.samples, 0, 1'000'000);
  const auto start = Clock::now();
  std::vector<Job> jobs;

  auto compare = [](CellOutcome& o, const EdgeColoring& c, Color from, Color to) {
    ++o.cell.instances;
    const int before = solve(c).count;
    const int after = solve(merge_colors(c, from, to)).count;
    const int gap = after - before;
    if (gap < 0) {
      o.fail("merging color " + std::to_string(from) + " into " + std::to_string(to) + " lowered the count from " +
                 std::to_string(before) + " to " + std::to_string(after),
             format_coloring(c),
             "htp merge FILE " + std::to_string(from) + " " + std::to_string(to) +
                 " -o merged.txt && htp solve FILE && htp solve merged.txt");
    } else if (gap > o.cell.max_observed) {
      o.witness("merge " + std::to_string(from) + "->" + std::to_string(to) + " raises the count by " +
                    std::to_string(gap),
                after, format_coloring(c));
    }
    o.cell.max_observed = std::max(o.cell.max_observed, gap);
  };

  jobs.push_back([compare] {
    CellOutcome o;
    o.cell.label = "fixed";
    const auto rainbow3 = EdgeColoring::complete_from(3, 3, [](Vertex u, Vertex v) { return u + v; });
    compare(o, rainbow3, 3, 2);
    compare(o, generate_canonical(5, 4).coloring, 4, 1);
    return o;
  });

  const int sizes = options.max_n - 2;
  for (int n = 3; n <= options.max_n; ++n) {
    const int trials = options.samples / sizes + (n - 3 < options.samples % sizes ? 1 : 0);
    jobs.push_back([n, trials, &options, compare] {
      CellOutcome o;
      o.cell.label = label("random", n);
      o.cell.n = n;
      auto rng = cell_rng(options.seed, 2, n, 0);
      const int m = static_cast<int>(choose2(n));
      for (int i = 0; i < trials; ++i) {
        const int r = std::uniform_int_distribution<int>(2, m)(rng);
        const auto c = random_surjective_coloring(n, r, rng);
        const int from = std::uniform_int_distribution<int>(1, r)(rng);
        int to = std::uniform_int_distribution<int>(1, r - 1)(rng);
        if (to >= from) ++to;
        compare(o, c, from, to);
      }
      return o;
    });
  }
  return assemble("monotonicity", describe(options, true, true), run_jobs(jobs, options.threads), start);
}

namespace {

bool connected(int n, const std::vector<std::uint32_t>& adj) {
  if (n <= 1) return true;
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (std::uint32_t{1} << n) - 1;
}

// A bridge must lie on every spanning tree, so only the edges of one BFS tree
// need to be tested.
bool has_bridge(int n, std::vector<std::uint32_t>& adj) {
  std::vector<Edge> tree;
  std::uint32_t seen = 1;
  std::vector<int> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int x = queue[q];
    for (std::uint32_t nb = adj[static_cast<std::size_t>(x)] & ~seen; nb != 0; nb &= nb - 1) {
      const int y = std::countr_zero(nb);
      seen |= std::uint32_t{1} << y;
      tree.push_back({x, y});
      queue.push_back(y);
    }
  }
  for (const auto& e : tree) {
    adj[static_cast<std::size_t>(e.u)] ^= std::uint32_t{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] ^= std::uint32_t{1} << e.u;
    const bool still = connected(n, adj);
    adj[static_cast<std::size_t>(e.u)] ^= std::uint32_t{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] ^= std::uint32_t{1} << e.u;
    if (!still) return true;
  }
  return false;
}

// K_{n-1} plus one pendant edge.
bool is_clique_plus_pendant(int n, const std::vector<std::uint32_t>& adj) {
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  for (int leaf = 0; leaf < n; ++leaf) {
    if (std::popcount(adj[static_cast<std::size_t>(leaf)]) != 1) continue;
    const std::uint32_t rest = all & ~(std::uint32_t{1} << leaf);
    bool clique = true;
    for (int v = 0; v < n && clique; ++v)
      if (v != leaf) clique = (adj[static_cast<std::size_t>(v)] & rest) == (rest & ~(std::uint32_t{1} << v));
    if (clique) return true;
  }
  return false;
}

std::string graph_as_coloring(int n, const std::vector<Edge>& pairs, std::uint32_t mask) {
  std::vector<ColoredEdge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (mask >> i & 1u) edges.push_back({pairs[i].u, pairs[i].v, 1});
  const int r = edges.empty() ? 0 : 1;
  return format_coloring(EdgeColoring(n, r, std::move(edges), false));
}

}  // namespace

VerificationReport campaign_cutedge(const CampaignOptions& options) {
  require_range("max_n", options.max_n, 1, 7);
  const auto start = Clock::now();
  std::vector<Job> jobs;
  for (int n = 1; n <= options.max_n; ++n)
    jobs.push_back([n] {
      CellOutcome o;
      const int bound = static_cast<int>(choose2(n - 1) + 1);
      o.cell = {label("graphs", n), n, 0, 0, 0, 0, bound, 0};
      std::vector<Edge> pairs;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
      const auto m = static_cast<int>(pairs.size());
      std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
      bool witnessed = false;
      std::int64_t bridged = 0;
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        const int edges = std::popcount(mask);
        if (edges < n - 1) continue;
        std::fill(adj.begin(), adj.end(), 0);
        for (int i = 0; i < m; ++i)
          if (mask >> i & 1u) {
            adj[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].u)] |= std::uint32_t{1} << pairs[static_cast<std::size_t>(i)].v;
            adj[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].v)] |= std::uint32_t{1} << pairs[static_cast<std::size_t>(i)].u;
          }
        if (!connected(n, adj)) continue;
        ++o.cell.instances;
        if (!has_bridge(n, adj)) continue;
        ++bridged;
        o.cell.max_observed = std::max(o.cell.max_observed, edges);
        if (edges > bound) {
          o.fail("bridged graph with " + std::to_string(edges) + " edges exceeds " + std::to_string(bound),
                 graph_as_coloring(n, pairs, mask), "htp verify cutedge --max-n " + std::to_string(n));
        } else if (edges == bound && !witnessed) {
          witnessed = true;
          if (n >= 3 && !is_clique_plus_pendant(n, adj))
            o.fail("tight bridged graph is not a clique plus a pendant edge", graph_as_coloring(n, pairs, mask),
                   "htp verify cutedge --max-n " + std::to_string(n));
          o.witness("bridged graph with " + std::to_string(edges) + " edges (" + std::to_string(bridged) +
                        " bridged graphs seen so far)",
                    edges, graph_as_coloring(n, pairs, mask));
        }
      }
      if (n >= 3 && !witnessed)
        o.fail("no bridged graph reaches " + std::to_string(bound) + " edges", "",
               "htp verify cutedge --max-n " + std::to_string(n));
      return o;
    });
  return assemble("cutedge", describe(options, false, false), run_jobs(jobs, options.threads), start);
}

namespace {

// Constructive output against the closed form and, when given, the exact count.
void check_constructive(CellOutcome& o, const EdgeColoring& c, bool exact_bound, bool compare_solver) {
  ++o.cell.instances;
  const std::string text = format_coloring(c);
  const auto t0 = Clock::now();
  ConstructResult built;
  try {
    built = partition_complete(c);
  } catch (const DefectError& e) {
    o.fail(e.what(), e.instance(), "htp construct FILE");
    return;
  }
  o.cell.max_ms = std::max(o.cell.max_ms, elapsed_ms(t0));
  const int count = built.partition.count();
  o.cell.max_observed = std::max(o.cell.max_observed, count);
  o.cell.formula = std::max(o.cell.formula, built.bound);
  for (const auto& level : built.levels)
    if (level.swaps > std::max(level.n - 2, 0)) o.fail("too many swaps on one level", text, "htp construct FILE");
  if (count > built.bound)
    o.fail("constructive count " + std::to_string(count) + " exceeds closed form " + std::to_string(built.bound),
           text, "htp construct FILE");
  if (exact_bound && count != built.bound)
    o.fail("constructive count " + std::to_string(count) + " differs from closed form " +
               std::to_string(built.bound) + " on an extremal coloring",
           text, "htp construct FILE");
  if (compare_solver) {
    const int exact = solve(c).count;
    if (count < exact)
      o.fail("constructive count " + std::to_string(count) + " below the exact minimum " + std::to_string(exact),
             text, "htp construct FILE && htp solve FILE");
  }
}

}  // namespace

VerificationReport campaign_constructive(const CampaignOptions& options) {
  require_range("max_n", options.max_n, 3, 14);
  require_range("samples", options.samples, 0, 1'000'000);
  const auto start = Clock::now();
  std::vector<Job> jobs;

  for (int n = 3; n <= std::min(options.max_n, 4); ++n)
    for (int r = 1; r <= choose2(n); ++r)
      jobs.push_back([n, r] {
        CellOutcome o;
        o.cell = {label("exhaustive", n, r), n, r, 0, 0, 0, 0, 0};
        for_each_surjective_coloring(n, r, [&](const EdgeColoring& c) { check_constructive(o, c, false, true); });
        return o;
      });
  if (options.max_n >= 5)
    for (int r = 1; r <= 10; ++r)
      jobs.push_back([r] {
        CellOutcome o;
        o.cell = {label("relabel-exhaustive", 5, r), 5, r, 0, 0, 0, 0, 0};
        for_each_coloring_up_to_relabel(5, r, [&](const EdgeColoring& c) { check_constructive(o, c, false, true); });
        return o;
      });

  for (int n = 3; n <= options.max_n; ++n)
    jobs.push_back([n] {
      CellOutcome o;
      o.cell = {label("canonical", n), n, 0, 0, 0, 0, 0, 0};
      for (int r = 2; r <= choose2(n); ++r) check_constructive(o, generate_canonical(n, r).coloring, true, false);
      return o;
    });

  for (int n = std::max(3, 6); n <= options.max_n; ++n)
    jobs.push_back([n, &options] {
      CellOutcome o;
      o.cell = {label("random", n), n, 0, 0, 0, 0, 0, 0};
      auto rng = cell_rng(options.seed, 3, n, 0);
      const int m = static_cast<int>(choose2(n));
      const SolveOptions guard{};
      for (int i = 0; i < options.samples; ++i) {
        // Alternate between the hardest color count of a random threshold
        // range and a uniform color count.
        int r;
        if (i % 2 == 0) {
          const int t_max = static_cast<int>(threshold(m));
          const int t = std::uniform_int_distribution<int>(1, t_max)(rng);
          r = static_cast<int>(std::min<std::int64_t>(color_range(t).min, m));
        } else {
          r = std::uniform_int_distribution<int>(2, m)(rng);
        }
        check_constructive(o, random_surjective_coloring(n, r, rng), false, n <= guard.max_vertices);
      }
      return o;
    });

  return assemble("constructive", describe(options, true, true), run_jobs(jobs, options.threads), start);
}

VerificationReport run_campaign(std::string_view name, const CampaignOptions& options) {
  if (name == "theorem1") return campaign_theorem1(options);
  if (name == "monotonicity") return campaign_monotonicity(options);
  if (name == "cutedge") return campaign_cutedge(options);
  if (name == "constructive") return campaign_constructive(options);
  throw Error(ErrorCode::InvalidArgument, "unknown campaign '" + std::string(name) + "'");
}

}  // namespace htp
