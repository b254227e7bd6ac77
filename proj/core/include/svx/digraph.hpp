#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "svx/rational.hpp"
#include "svx/vertex_set.hpp"

namespace svx {

enum class Side { Out, In };

struct Edge {
  int from = 0;
  int to = 0;
  Rat weight;
};

/// Weighted digraph with exact rational weights, immutable after
/// construction. Undirected graphs store a symmetric weight map (both
/// ordered pairs per edge, self-loops once); all queries are in terms of
/// the ordered map, so e(A,B) counts ordered pairs.
///
/// Parallel edges merge by weight addition at construction; zero-weight
/// pairs are absent; negative or non-finite weights are rejected.
class Digraph {
 public:
  /// Edges are ordered pairs; duplicates merge additively.
  static Digraph directed(int n, const std::vector<Edge>& edges);

  /// Each undirected edge is given once; (u,v) implies weight on (v,u).
  static Digraph undirected(int n, const std::vector<Edge>& edges);

  int size() const { return n_; }
  bool undirected_flag() const { return undirected_; }

  int edge_pair_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Weight of the ordered pair (u,v); zero when absent.
  const Rat& weight(int u, int v) const;

  const Rat& out_degree(int v) const;
  const Rat& in_degree(int v) const;
  const Rat& degree(int v, Side side) const {
    return side == Side::Out ? out_degree(v) : in_degree(v);
  }

  /// Sum of all weights; equals vol(V) for Eulerian graphs.
  const Rat& total_weight() const { return total_; }

  Rat volume(const VertexSet& s, Side side) const;

  /// Ordered edge mass from A to B.
  Rat edge_mass(const VertexSet& a, const VertexSet& b) const;

  /// |d+(v) - d-(v)| <= tol * max(1, d+(v) + d-(v)) for every v.
  /// tol == 0 is an exact rational comparison.
  bool is_eulerian(double tol = 1e-9) const;

  bool strongly_connected() const;

  /// Common weighted degree when every vertex has equal in- and
  /// out-degree and they all agree; nullopt otherwise.
  std::optional<Rat> regular_degree() const;

  /// Out-adjacency as bitmasks over the weight support (n <= 64 only).
  std::vector<std::uint64_t> out_support_masks() const;

  const std::vector<std::pair<int, Rat>>& out_neighbors(int v) const;
  const std::vector<std::pair<int, Rat>>& in_neighbors(int v) const;

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  Digraph(int n, bool undirected, std::vector<Edge> merged);

  int n_ = 0;
  bool undirected_ = false;
  std::vector<Edge> edges_;  // sorted by (from, to)
  std::vector<std::vector<std::pair<int, Rat>>> out_, in_;
  std::vector<Rat> out_deg_, in_deg_;
  Rat total_;
};

/// Stationary distribution of the random walk, exact. Solves pi W = pi,
/// |pi|_1 = 1 by rational Gaussian elimination. Requires strong
/// connectivity and positive out-degrees; intended for n <= 64.
std::vector<Rat> stationary_distribution_exact(const Digraph& g);

/// Reweights to w'(u,v) = pi(u) w(u,v) / d+(u). The result is Eulerian and
/// has the same random walk matrix. Exact for n <= 64, floating-point
/// stationary solve above that (weights then dyadic rationals, Eulerian to
/// ~1e-12 relative).
Digraph eulerianize(const Digraph& g);

/// w'(u,v) = (w(u,v) + w(v,u)) / 2, flagged undirected.
Digraph undirectify(const Digraph& g);

/// Bipartite graph on 2n vertices: left v (index v) joined to right u
/// (index n+u) with weight w(v,u). Total edge mass equals g's.
Digraph symmetric_lift(const Digraph& g);

/// Splits a subset of the 2n lift vertices into (left part, right part).
LiftSet lift_project(int n, const VertexSet& lift_subset);

/// Inverse of lift_project.
VertexSet lift_embed(const LiftSet& s);

}  // namespace svx
