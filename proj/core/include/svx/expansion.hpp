#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "svx/digraph.hpp"
#include "svx/scaled_graph.hpp"

namespace svx {

/// Enumeration size caps. The defaults keep every exhaustive scan in the
/// seconds range; all are overridable.
struct ExactLimits {
  int pair_n = 12;      // 4^n ordered-pair scans
  int subset_n = 16;    // 2^n subset scans
  int sign_n = 12;      // 3^n sign-vector scans
  int kway_pair_n = 9;  // two-family k-way scans
  int kway_set_n = 14;  // k disjoint-set scans (used on lifts)
  int kmax = 3;
  int vertex_n = 32;    // 2^n neighborhood scans
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A pair cut (S, T) with numerator e(S,T^c) + e(S^c,T), denominator
/// vol(S) + vol(T) and their exact ratio.
struct CutPair {
  VertexSet S, T;
  Rat numerator, denominator, value;
};

/// Entries in {-1, 0, +1}; A = {y=+1}, B = {y=-1}, support = A u B.
struct SignVector {
  std::vector<std::int8_t> y;

  explicit SignVector(int n) : y(n, 0) {}
  int size() const { return static_cast<int>(y.size()); }
  bool all_zero() const;
  VertexSet plus_set() const;
  VertexSet minus_set() const;
  VertexSet support() const;
};

/// k pairs (S_i, T_i), the S_i mutually disjoint and the T_i mutually
/// disjoint, every set non-empty; value = max_i phi_dir(S_i, T_i).
struct PartitionFamily {
  int k = 0;
  std::vector<VertexSet> s_sets, t_sets;
  std::vector<Rat> values;
  Rat max_value;
};

/// k mutually disjoint non-empty sets with value = max_i phi(S_i).
struct DisjointFamily {
  int k = 0;
  std::vector<VertexSet> sets;
  std::vector<Rat> values;
  Rat max_value;
};

/// Exhaustive vertex-expansion data for an unweighted-support regular
/// digraph. Per size s: the minimum of |N+(S)| and of |N+(S)\S| over all
/// |S| = s, with argmin sets. delta and delta_prime minimize over sizes
/// 1..bound.
struct ExpansionProfile {
  int n = 0;
  int bound = 0;
  std::vector<std::int64_t> min_neighbors;      // index s = 1..n
  std::vector<std::int64_t> min_neighbors_out;  // |N+(S)\S|
  std::vector<std::uint64_t> argmin_neighbors, argmin_neighbors_out;
  Rat delta;        // min |N+(S)|/|S| - 1
  Rat delta_prime;  // min |N+(S)\S| / |S|
  VertexSet delta_witness, magnifier_witness;
};

Rat phi(const Digraph& g, const VertexSet& s);

/// Exact minimum of phi over 0 < vol(S) <= vol(V)/2, lexicographically
/// least witness among minimizers.
std::pair<Rat, VertexSet> min_phi(const Digraph& g, const ExactLimits& limits = {});

CutPair phi_dir(const Digraph& g, const VertexSet& s, const VertexSet& t);

/// Exact minimum over all pairs with 0 < vol(S)+vol(T) <= vol(V).
/// Empty S or empty T is legal. Witness ties break lexicographically on
/// the (S, T) bitmask pair.
CutPair min_phi_dir(const Digraph& g, const ExactLimits& limits = {});

/// Minimum over pairs with |S| = |T| and 0 < vol(S)+vol(T) <= vol(V). The
/// volume constraint carries over from the unbalanced minimum (and rules
/// out the trivial (V, V) pair); see the implementation note for why the
/// unconstrained variant is not monotone.
CutPair min_phi_dir_balanced(const Digraph& g, const ExactLimits& limits = {});

/// Minimum over disjoint pairs with 0 < vol(S)+vol(T) <= vol(V).
CutPair min_beta_dir(const Digraph& g, const ExactLimits& limits = {});

/// Bipartiteness ratio of a sign vector; evaluates both the |y_u + y_v|
/// form and the e(A)+e(B)+e(S,S^c) form and insists they agree.
Rat beta_sign(const Digraph& g, const SignVector& y);

/// Exact minimum of beta_sign over nonzero sign vectors.
std::pair<Rat, SignVector> min_beta(const Digraph& g, const ExactLimits& limits = {});

/// Minimum over two families of k disjoint non-empty sets of the worst
/// pair value; no cross-family or volume constraints.
PartitionFamily min_phi_k_dir(const Digraph& g, int k, const ExactLimits& limits = {});

/// Same with the extra per-index constraint S_i = T_i or S_i disjoint T_i.
PartitionFamily min_rho_k_dir(const Digraph& g, int k, const ExactLimits& limits = {});

/// k-way expansion constant: min over k disjoint non-empty sets of
/// max phi(S_i); no volume cap. Undirected input.
DisjointFamily rho_k(const Digraph& g, int k, const ExactLimits& limits = {});

/// Exhaustive neighborhood scan; weights are read as support only.
/// Requires a (weighted-)regular graph. threads = 0 picks a default.
ExpansionProfile vertex_expansion(const Digraph& g, int bound,
                                  const ExactLimits& limits = {}, int threads = 0);

}  // namespace svx
