#include "svx/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "svx/spectra.hpp"

namespace svx {

namespace {

/// Best prefix cut of the given vertex order. The sweep is the one
/// operation meant to scale past the enumeration caps, so it does its
/// exact accounting in rational arithmetic directly (only O(m) operations)
/// instead of the int64 scaling the mask scans use. Minimizes
/// cut / min(vol, total-vol) over proper prefixes with both sides of
/// positive volume; the first best prefix wins ties.
struct SweepBest {
  bool set = false;
  Rat num, den;
  int len = 0;
};

SweepBest best_prefix_cut(const Digraph& g, const std::vector<int>& order) {
  const int n = g.size();
  const Rat total = g.total_weight();
  std::vector<char> in(n, 0);
  Rat cut, vol;
  SweepBest best;
  for (int i = 0; i + 1 < n; ++i) {
    const int x = order[i];
    for (const auto& [v, w] : g.out_neighbors(x))
      if (v != x && !in[v]) cut += w;
    for (const auto& [u, w] : g.in_neighbors(x))
      if (u != x && in[u]) cut -= w;
    in[x] = 1;
    vol += g.out_degree(x);
    const Rat other = total - vol;
    const Rat small = std::min(vol, other);
    if (small.sign() <= 0) continue;
    if (!best.set || cut * best.den < best.num * small) {
      best.set = true;
      best.num = cut;
      best.den = small;
      best.len = i + 1;
    }
  }
  return best;
}

}  // namespace

Certificate sweep_cut_pair(const Digraph& g) {
  const int n = g.size();
  if (n < 2) throw std::invalid_argument("sweep_cut_pair: need at least two vertices");
  if (!g.is_eulerian())
    throw std::invalid_argument("sweep_cut_pair: graph is not Eulerian");

  const Digraph lift = symmetric_lift(g);
  EigenSystem eig = symmetric_eigen(normalized_adjacency(lift), true);
  const int m = 2 * n;
  const double sigma2 = eig.values[1];

  // Exact trivial eigenvector, for filtering it out of degenerate clusters.
  std::vector<double> top(m);
  for (int v = 0; v < m; ++v) top[v] = std::sqrt(lift.out_degree(v).to_double());
  double top_norm = std::sqrt(std::inner_product(top.begin(), top.end(), top.begin(), 0.0));
  for (double& x : top) x /= top_norm;

  std::vector<double> inv_sqrt_deg(m);
  for (int v = 0; v < m; ++v) inv_sqrt_deg[v] = 1.0 / std::sqrt(lift.out_degree(v).to_double());

  SweepBest best;
  VertexSet winning(m);
  for (int k = 0; k < m; ++k) {
    if (std::abs(eig.values[k] - sigma2) > 1e-8) continue;
    std::vector<double> vec = eig.vectors[k];
    double dot = std::inner_product(vec.begin(), vec.end(), top.begin(), 0.0);
    for (int i = 0; i < m; ++i) vec[i] -= dot * top[i];
    double norm = std::sqrt(std::inner_product(vec.begin(), vec.end(), vec.begin(), 0.0));
    if (norm < 1e-10) continue;

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      double xa = vec[a] * inv_sqrt_deg[a], xb = vec[b] * inv_sqrt_deg[b];
      if (xa != xb) return xa > xb;
      return a < b;
    });
    SweepBest cand = best_prefix_cut(lift, order);
    if (!cand.set) continue;
    if (!best.set || cand.num * best.den < best.num * cand.den) {
      best = cand;
      VertexSet prefix(m);
      for (int i = 0; i < cand.len; ++i) prefix.add(order[i]);
      winning = prefix;
    }
  }
  if (!best.set)
    throw std::runtime_error("sweep_cut_pair: no usable sweep vector");

  VertexSet x = winning;
  // Use the smaller-volume side, so the projected pair meets the volume cap.
  Rat vol_x = lift.volume(x, Side::Out);
  if (Rat(2) * vol_x > lift.total_weight()) x = x.complement();

  LiftSet halves = lift_project(n, x);
  CutPair cut = phi_dir(g, halves.left, halves.right);
  if (cut.value != best.num / best.den)
    throw std::logic_error("sweep_cut_pair: projection changed the cut value");

  Certificate cert;
  cert.cut = cut;
  cert.sigma2 = sigma2;
  cert.bound = std::sqrt(2.0 * std::max(0.0, 1.0 - sigma2));
  cert.satisfied = cut.value.to_double() <= cert.bound + 1e-9;
  return cert;
}

CutPair balance_pair(const Digraph& g, const VertexSet& s, const VertexSet& t) {
  if (!g.regular_degree())
    throw std::invalid_argument("balance_pair: graph is not regular");
  CutPair input = phi_dir(g, s, t);
  if (input.value >= Rat(1))
    throw std::invalid_argument("balance_pair: phi_dir(S,T) = 1, bound degenerate");

  VertexSet s2 = s, t2 = t;
  while (s2.count() > t2.count()) {
    auto idx = s2.indices();
    s2.remove(idx.back());
  }
  while (t2.count() > s2.count()) {
    auto idx = t2.indices();
    t2.remove(idx.back());
  }
  return phi_dir(g, s2, t2);
}

CaseSplit case_split(const Digraph& g, const VertexSet& s, const VertexSet& t) {
  if (!g.undirected_flag()) throw std::invalid_argument("case_split: directed input");
  Rat vol_s = g.volume(s, Side::Out), vol_t = g.volume(t, Side::In);
  Rat den = vol_s + vol_t;
  if (den.is_zero()) throw std::invalid_argument("case_split: both sets have zero volume");

  CaseSplit out;
  VertexSet inter = s & t;
  if (Rat(3) * g.volume(inter, Side::Out) >= den) {
    out.kind = CaseSplit::Kind::Equal;
    out.S = inter;
    out.T = inter;
    if (!inter.empty() && !g.volume(inter, Side::Out).is_zero())
      out.value = phi(g, inter);
  } else {
    out.kind = CaseSplit::Kind::Disjoint;
    out.S = minus(s, t);
    out.T = minus(t, s);
    Rat den2 = g.volume(out.S, Side::Out) + g.volume(out.T, Side::In);
    if (!den2.is_zero()) out.value = phi_dir(g, out.S, out.T).value;
  }
  return out;
}

}  // namespace svx
