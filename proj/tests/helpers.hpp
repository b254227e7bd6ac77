#pragma once

#include <optional>
#include <vector>

#include "svx/digraph.hpp"
#include "svx/expansion.hpp"
#include "svx/families.hpp"

namespace svx::testing {

inline Digraph path_graph() { return Digraph::directed(2, {{0, 1, Rat(1)}}); }

inline Digraph two_directed_triangles() {
  return Digraph::directed(6, {{0, 1, Rat(1)},
                               {1, 2, Rat(1)},
                               {2, 0, Rat(1)},
                               {3, 4, Rat(1)},
                               {4, 5, Rat(1)},
                               {5, 3, Rat(1)}});
}

inline Digraph two_undirected_triangles() {
  return Digraph::undirected(6, {{0, 1, Rat(1)},
                                 {1, 2, Rat(1)},
                                 {2, 0, Rat(1)},
                                 {3, 4, Rat(1)},
                                 {4, 5, Rat(1)},
                                 {5, 3, Rat(1)}});
}

// Two triangles joined by one edge; its relating minimum comes from the
// conductance branch (the bridge cut).
inline Digraph barbell_graph() {
  return Digraph::undirected(6, {{0, 1, Rat(1)},
                                 {1, 2, Rat(1)},
                                 {2, 0, Rat(1)},
                                 {3, 4, Rat(1)},
                                 {4, 5, Rat(1)},
                                 {5, 3, Rat(1)},
                                 {2, 3, Rat(1)}});
}

// Deliberately naive re-derivations used as oracles against the scan
// engines. Everything below works straight off the Digraph in exact
// arithmetic, with no incremental state.

inline std::optional<std::pair<Rat, VertexSet>> naive_min_phi(const Digraph& g) {
  const int n = g.size();
  Rat half_vol = g.total_weight() / Rat(2);
  std::optional<std::pair<Rat, VertexSet>> best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s = VertexSet::from_mask(n, mask);
    Rat vol = g.volume(s, Side::Out);
    if (vol.is_zero() || vol > half_vol) continue;
    Rat value = g.edge_mass(s, s.complement()) / vol;
    if (!best || value < best->first) best = {{value, s}};
  }
  return best;
}

inline std::optional<CutPair> naive_min_phi_dir(const Digraph& g) {
  const int n = g.size();
  std::optional<CutPair> best;
  for (std::uint64_t sm = 0; sm < (std::uint64_t{1} << n); ++sm) {
    for (std::uint64_t tm = 0; tm < (std::uint64_t{1} << n); ++tm) {
      VertexSet s = VertexSet::from_mask(n, sm), t = VertexSet::from_mask(n, tm);
      Rat den = g.volume(s, Side::Out) + g.volume(t, Side::In);
      if (den.is_zero() || den > g.total_weight()) continue;
      Rat num = g.edge_mass(s, t.complement()) + g.edge_mass(s.complement(), t);
      Rat value = num / den;
      if (!best || value < best->value) best = CutPair{s, t, num, den, value};
    }
  }
  return best;
}

}  // namespace svx::testing
