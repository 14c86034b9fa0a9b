#include "htp/canonical.hpp"

#include <string>

#include "htp/error.hpp"
#include "htp/formula.hpp"
#include "htp/rainbow.hpp"

namespace htp {

CanonicalColoring generate_canonical(int n, int r, const CanonicalOptions& options) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "canonical: n must be at least 3");
  if (r < 2 || r > choose2(n))
    throw Error(ErrorCode::InvalidArgument,
                "canonical: r must lie in 2.." + std::to_string(choose2(n)) + ", got " + std::to_string(r));

  CanonicalLayout layout;
  layout.t = static_cast<int>(threshold(r));
  const int t = layout.t;
  for (Vertex v = 0; v < t; ++v) layout.clique.push_back(v);
  layout.hub = t;
  if (n >= t + 2) layout.extra = t + 1;

  std::vector<Color> matrix(static_cast<std::size_t>(n) * n, 0);
  auto set = [&](Vertex a, Vertex b, Color col) {
    matrix[static_cast<std::size_t>(a) * n + b] = col;
    matrix[static_cast<std::size_t>(b) * n + a] = col;
  };

  // Distinct colors on the clique, lexicographic edge order.
  Color next = 1;
  for (Vertex a = 0; a < t; ++a)
    for (Vertex b = a + 1; b < t; ++b) set(a, b, next++);

  // Leftover colors go to hub edges (u,0), (u,1), ... while they last.
  for (Vertex s = 0; s < t && next <= r; ++s) {
    layout.hub_edges[next] = {s, layout.hub};
    set(s, layout.hub, next++);
  }

  // At most one color can still be unused; it fills the rest.
  Color fill = next <= r ? next : options.fill_when_exhausted.value_or(1);
  if (fill < 1 || fill > r) throw Error(ErrorCode::InvalidArgument, "canonical: fill color out of range");
  bool filled_any = false;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (matrix[static_cast<std::size_t>(a) * n + b] == 0) {
        set(a, b, fill);
        filled_any = true;
      }
  if (filled_any) layout.fill_color = fill;

  auto coloring = EdgeColoring::complete_from(n, r, [&](Vertex a, Vertex b) {
    return matrix[static_cast<std::size_t>(a) * n + b];
  });
  return {std::move(coloring), std::move(layout)};
}

TreePartition extremal_partition(const EdgeColoring& c, const CanonicalLayout& layout) {
  const int n = c.vertex_count();
  std::vector<Vertex> core = layout.clique;
  core.push_back(layout.hub);
  if (layout.extra) core.push_back(*layout.extra);

  auto tree = rainbow_spanning_tree(c, core);
  if (!tree)
    throw DefectError("no rainbow spanning tree on the clique, hub and extra vertex of the canonical coloring",
                      format_coloring(c));

  TreePartition p;
  p.trees.push_back({core, tree->edges});
  Vertex next = static_cast<Vertex>(core.size());
  for (; next + 1 < n; next += 2) p.trees.push_back({{next, next + 1}, {{next, next + 1, c.color(next, next + 1)}}});
  if (next < n) p.trees.push_back({{next}, {}});
  normalize(p);
  return p;
}

}  // namespace htp
