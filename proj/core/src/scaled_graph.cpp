#include "svx/scaled_graph.hpp"

#include <gmpxx.h>

#include <limits>
#include <stdexcept>

namespace svx {

ScaledGraph ScaledGraph::build(const Digraph& g) {
  mpz_class lcm = 1;
  for (const Edge& e : g.edges())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.weight.raw().get_den().get_mpz_t());

  mpz_class scaled_total = 0;
  for (const Edge& e : g.edges())
    scaled_total += e.weight.raw().get_num() * (lcm / e.weight.raw().get_den());

  // Comparisons cross-multiply values bounded by 2 * total, so require
  // 2 * total to fit well inside int64.
  mpz_class limit = mpz_class(std::numeric_limits<std::int64_t>::max()) / 8;
  if (scaled_total > limit)
    throw std::invalid_argument(
        "ScaledGraph: weights too large for exact integer enumeration");

  ScaledGraph s;
  s.n = g.size();
  s.out_deg.assign(s.n, 0);
  s.in_deg.assign(s.n, 0);
  s.out_adj.resize(s.n);
  s.in_adj.resize(s.n);
  for (const Edge& e : g.edges()) {
    mpz_class w = e.weight.raw().get_num() * (lcm / e.weight.raw().get_den());
    std::int64_t wi = mpz_get_si(w.get_mpz_t());
    s.edges.push_back({e.from, e.to, wi});
    s.out_deg[e.from] += wi;
    s.in_deg[e.to] += wi;
    s.out_adj[e.from].push_back({e.to, wi});
    s.in_adj[e.to].push_back({e.from, wi});
    s.total += wi;
  }
  return s;
}

}  // namespace svx
