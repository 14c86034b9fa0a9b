#include "htp/formula.hpp"

#include <cmath>
#include <string>

#include "htp/coloring.hpp"
#include "htp/error.hpp"

namespace htp {

std::int64_t threshold(std::int64_t r) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "threshold: r must be at least 2, got " + std::to_string(r));
  // C(t,2) <= r-2 < C(t+1,2): start from the real root, then correct.
  const double x = static_cast<double>(r - 2);
  auto t = static_cast<std::int64_t>((1.0 + std::sqrt(1.0 + 8.0 * x)) / 2.0);
  if (t < 1) t = 1;
  while (choose2(t) + 2 > r) --t;
  while (choose2(t + 1) + 1 < r) ++t;
  return t;
}

ColorRange color_range(std::int64_t t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "color_range: t must be at least 1");
  return {choose2(t) + 2, choose2(t + 1) + 1};
}

FormulaResult partition_number(std::int64_t n, std::int64_t r) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "partition_number: n must be positive");
  if (r < 0 || r > choose2(n))
    throw Error(ErrorCode::InvalidArgument, "partition_number: no " + std::to_string(r) + "-edge-coloring of K_" +
                                                std::to_string(n) + " exists");
  if (r == 0 && n != 1) throw Error(ErrorCode::InvalidArgument, "partition_number: r = 0 needs n = 1");

  FormulaResult out{n, r, std::nullopt, 1};
  if (r == 1) {
    out.value = (n + 1) / 2;
  } else if (r >= 2) {
    out.t = threshold(r);
    out.value = (n - *out.t + 1) / 2;
  }
  return out;
}

}  // namespace htp
