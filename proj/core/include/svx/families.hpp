#pragma once

#include <cstdint>
#include <string>

#include "svx/digraph.hpp"

namespace svx {

/// splitmix64; the fixed constants make seeds portable across builds.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) {
    // Rejection-free modulo is fine here: bounds are tiny against 2^64.
    return next() % bound;
  }

  /// true with probability p (p in [0,1], quantized to 2^-64).
  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next() < static_cast<std::uint64_t>(p * 18446744073709551616.0);
  }
};

/// Q_d on 2^d vertices, unit edge weights, plus `loops` unit self-loops
/// per vertex (merged into one loop of weight `loops`).
Digraph hypercube(int d, int loops = 0);

/// C_n with `loops` self-loops per vertex; undirected needs n >= 3,
/// directed n >= 2.
Digraph cycle(int n, int loops = 0, bool directed = false);

Digraph complete_bipartite(int half);

/// Four-vertex Eulerian digraph on {x,y,u,v} -> {0,1,2,3} whose directed
/// conductance vanishes while conductance and the disjoint-pair minimum
/// stay positive.
Digraph fig5_graph();

/// Six-vertex duplication of fig5 on {x,y,u1,u2,v1,v2} -> {0..5}; the
/// unit-weight variant is 2-in-2-out regular, the halved variant
/// 1-in-1-out regular. The two differ by a global scale factor.
Digraph fig6_unit_graph();
Digraph fig6_half_graph();

/// Samples edges independently, retries until strongly connected (at most
/// 64 attempts), Eulerianizes exactly, then rescales to integer weights.
/// Same seed, same graph, bit for bit.
Digraph random_eulerian(int n, double density, std::uint64_t seed);

/// Sum of d independent uniform permutation matrices; parallel edges merge
/// additively, so the result is Eulerian and d-regular by construction.
Digraph random_regular_digraph(int n, int d, std::uint64_t seed);

/// undirectify(random_eulerian(...)); used for undirected corpora.
Digraph random_undirected(int n, double density, std::uint64_t seed);

/// Reproducible description of a generated graph: family name plus the
/// parameters that matter for it. Identical spec => identical graph.
struct GeneratorSpec {
  std::string family;
  int n = 0;
  int d = 0;
  int loops = 0;
  int half = 0;
  bool directed = false;
  double density = 0.0;
  std::uint64_t seed = 0;

  Digraph build() const;
  std::string id() const;
};

}  // namespace svx
