#pragma once

#include <cstdint>
#include <optional>

namespace htp {

/// The threshold t = f(r): the unique t >= 1 with C(t,2)+2 <= r <= C(t+1,2)+1.
/// Requires r >= 2.
std::int64_t threshold(std::int64_t r);

struct ColorRange {
  std::int64_t min;
  std::int64_t max;
};

/// All r with threshold(r) == t. Requires t >= 1.
ColorRange color_range(std::int64_t t);

struct FormulaResult {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::optional<std::int64_t> t;  // absent for r < 2
  std::int64_t value = 0;
};

/// Minimum number of heterochromatic trees that suffices for every
/// r-edge-coloring of K_n: ceil(n/2) for r = 1, ceil((n - t)/2) for r >= 2,
/// and 1 for the single vertex (r = 0).
FormulaResult partition_number(std::int64_t n, std::int64_t r);

}  // namespace htp
