#pragma once

#include <optional>

#include "svx/digraph.hpp"
#include "svx/expansion.hpp"

namespace svx {

/// A feasible pair cut together with the spectral bound it certifies:
/// cut.value <= sqrt(2 (1 - sigma2)) must hold on Eulerian inputs.
struct Certificate {
  CutPair cut;
  double sigma2 = 0.0;
  double bound = 0.0;
  bool satisfied = false;
};

/// Sweep rounding on the symmetric lift. Sorts lift vertices by the
/// degree-normalized coordinates of a second-eigenvector, takes the best
/// prefix (equivalently suffix) cut by exact evaluation and projects it to
/// a pair (S, T). Every eigenvector in the second-eigenvalue cluster is
/// tried when the eigenvalue is degenerate.
Certificate sweep_cut_pair(const Digraph& g);

/// Equalizes |S| and |T| by dropping highest-index vertices from the
/// larger set. For a regular Eulerian graph with phi_dir(S,T) < 1 the
/// result satisfies phi_dir(S',T') <= 2 phi_dir(S,T) / (1 - phi_dir(S,T)).
CutPair balance_pair(const Digraph& g, const VertexSet& s, const VertexSet& t);

struct CaseSplit {
  enum class Kind { Equal, Disjoint };
  Kind kind = Kind::Equal;
  VertexSet S, T;
  /// phi(S cap T) in the equal case, phi_dir(S \ T, T \ S) in the disjoint
  /// case; absent when the returned sets carry no volume (bound vacuous).
  std::optional<Rat> value;
};

/// Volume case split: returns (S cap T, S cap T) when vol(S cap T) is at
/// least a third of vol(S) + vol(T), else (S \ T, T \ S). On undirected
/// inputs the returned value is at most 3 phi_dir(S, T).
CaseSplit case_split(const Digraph& g, const VertexSet& s, const VertexSet& t);

}  // namespace svx
