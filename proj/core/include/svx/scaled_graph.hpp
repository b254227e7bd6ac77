#pragma once

#include <cstdint>
#include <vector>

#include "svx/digraph.hpp"

namespace svx {

/// Integer snapshot of a Digraph: every weight multiplied by the least
/// common denominator so all arithmetic in the enumeration engines is
/// exact int64. Values computed from it are ratios of scaled quantities,
/// so the common factor cancels. Construction fails when the scaled total
/// mass would not leave 128-bit headroom for cross-multiplied comparisons.
struct ScaledGraph {
  struct SEdge {
    int from, to;
    std::int64_t w;
  };

  int n = 0;
  std::vector<SEdge> edges;
  std::vector<std::int64_t> out_deg, in_deg;
  std::vector<std::vector<std::pair<int, std::int64_t>>> out_adj, in_adj;
  std::int64_t total = 0;

  static ScaledGraph build(const Digraph& g);

  Rat ratio(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw std::invalid_argument("ScaledGraph: zero denominator");
    return Rat(static_cast<long>(num), static_cast<long>(den));
  }
};

/// a/b < c/d for nonnegative fractions with positive denominators.
inline bool frac_less(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return static_cast<__int128>(a) * d < static_cast<__int128>(c) * b;
}
inline bool frac_eq(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return static_cast<__int128>(a) * d == static_cast<__int128>(c) * b;
}

}  // namespace svx
