#include "svx/families.hpp"

#include <gmpxx.h>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace svx {

Digraph hypercube(int d, int loops) {
  if (d < 1) throw std::invalid_argument("hypercube: need d >= 1");
  if (loops < 0) throw std::invalid_argument("hypercube: negative loop count");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < d; ++b) {
      int u = v ^ (1 << b);
      if (v < u) edges.push_back({v, u, Rat(1)});
    }
    if (loops > 0) edges.push_back({v, v, Rat(loops)});
  }
  return Digraph::undirected(n, edges);
}

Digraph cycle(int n, int loops, bool directed) {
  if (directed ? n < 2 : n < 3)
    throw std::invalid_argument("cycle: vertex count too small");
  if (loops < 0) throw std::invalid_argument("cycle: negative loop count");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    edges.push_back({v, (v + 1) % n, Rat(1)});
    if (loops > 0) edges.push_back({v, v, Rat(loops)});
  }
  return directed ? Digraph::directed(n, edges) : Digraph::undirected(n, edges);
}

Digraph complete_bipartite(int half) {
  if (half < 1) throw std::invalid_argument("complete_bipartite: need half >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < half; ++u)
    for (int v = 0; v < half; ++v) edges.push_back({u, half + v, Rat(1)});
  return Digraph::undirected(2 * half, edges);
}

Digraph fig5_graph() {
  // x=0, y=1, u=2, v=3.
  return Digraph::directed(4, {{2, 0, Rat(1)},
                               {2, 3, Rat(1)},
                               {3, 2, Rat(1)},
                               {3, 1, Rat(1)},
                               {0, 3, Rat(1)},
                               {1, 2, Rat(1)}});
}

namespace {

std::vector<Edge> fig6_edges(const Rat& w) {
  // x=0, y=1, u1=2, u2=3, v1=4, v2=5.
  return {{2, 0, w}, {2, 4, w}, {4, 2, w}, {4, 1, w}, {0, 4, w}, {1, 2, w},
          {3, 0, w}, {3, 5, w}, {5, 3, w}, {5, 1, w}, {0, 5, w}, {1, 3, w}};
}

}  // namespace

Digraph fig6_unit_graph() { return Digraph::directed(6, fig6_edges(Rat(1))); }
Digraph fig6_half_graph() { return Digraph::directed(6, fig6_edges(Rat(1, 2))); }

Digraph random_eulerian(int n, double density, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_eulerian: need n >= 2");
  if (density <= 0.0 || density > 1.0)
    throw std::invalid_argument("random_eulerian: density outside (0, 1]");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (rng.bernoulli(density))
          edges.push_back({u, v, Rat(1 + static_cast<long>(rng.next_below(4)))});
    if (edges.empty()) continue;
    Digraph g = Digraph::directed(n, edges);
    bool positive_out = true;
    for (int v = 0; v < n; ++v)
      if (g.out_degree(v).is_zero()) positive_out = false;
    if (!positive_out || !g.strongly_connected()) continue;

    Digraph h = eulerianize(g);
    // Clear denominators so downstream integer scans stay comfortable.
    mpz_class lcm = 1, gcd = 0;
    for (const Edge& e : h.edges())
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.weight.raw().get_den().get_mpz_t());
    std::vector<Edge> scaled;
    for (const Edge& e : h.edges()) {
      mpz_class w = e.weight.raw().get_num() * (lcm / e.weight.raw().get_den());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), w.get_mpz_t());
      scaled.push_back({e.from, e.to, Rat(mpq_class(w))});
    }
    if (gcd > 1)
      for (Edge& e : scaled) e.weight = Rat(mpq_class(e.weight.raw() / mpq_class(gcd)));
    return Digraph::directed(n, scaled);
  }
  throw std::runtime_error("random_eulerian: no strongly connected sample in 64 attempts");
}

Digraph random_regular_digraph(int n, int d, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_regular_digraph: need n >= 2");
  if (d < 1 || d > n) throw std::invalid_argument("random_regular_digraph: need 1 <= d <= n");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  std::vector<int> perm(n);
  for (int round = 0; round < d; ++round) {
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
    for (int v = 0; v < n; ++v) edges.push_back({v, perm[v], Rat(1)});
  }
  return Digraph::directed(n, edges);
}

Digraph random_undirected(int n, double density, std::uint64_t seed) {
  return undirectify(random_eulerian(n, density, seed));
}

Digraph GeneratorSpec::build() const {
  if (family == "fig5") return fig5_graph();
  if (family == "fig6_unit") return fig6_unit_graph();
  if (family == "fig6_half") return fig6_half_graph();
  if (family == "cycle") return cycle(n, loops, directed);
  if (family == "hypercube") return hypercube(d, loops);
  if (family == "complete_bipartite") return complete_bipartite(half);
  if (family == "random_eulerian") return random_eulerian(n, density, seed);
  if (family == "random_regular") return random_regular_digraph(n, d, seed);
  if (family == "random_undirected") return random_undirected(n, density, seed);
  throw std::invalid_argument("GeneratorSpec: unknown family '" + family + "'");
}

std::string GeneratorSpec::id() const {
  std::ostringstream s;
  s << family;
  if (family == "cycle")
    s << "(n=" << n << ",loops=" << loops << "," << (directed ? "directed" : "undirected") << ")";
  else if (family == "hypercube")
    s << "(d=" << d << ",loops=" << loops << ")";
  else if (family == "complete_bipartite")
    s << "(half=" << half << ")";
  else if (family == "random_eulerian" || family == "random_undirected")
    s << "(n=" << n << ",density=" << density << ",seed=" << seed << ")";
  else if (family == "random_regular")
    s << "(n=" << n << ",d=" << d << ",seed=" << seed << ")";
  return s.str();
}

}  // namespace svx
