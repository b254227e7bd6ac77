#include "svx/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <thread>

#include "svx/threading.hpp"

namespace svx {

int resolve_threads(int requested) {
  int t = requested;
  if (t <= 0) {
    if (const char* env = std::getenv("SVX_THREADS")) t = std::atoi(env);
  }
  if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
  if (t <= 0) t = 1;
  return std::min(t, 64);
}

bool SignVector::all_zero() const {
  for (std::int8_t v : y)
    if (v != 0) return false;
  return true;
}
VertexSet SignVector::plus_set() const {
  VertexSet s(size());
  for (int v = 0; v < size(); ++v)
    if (y[v] > 0) s.add(v);
  return s;
}
VertexSet SignVector::minus_set() const {
  VertexSet s(size());
  for (int v = 0; v < size(); ++v)
    if (y[v] < 0) s.add(v);
  return s;
}
VertexSet SignVector::support() const {
  VertexSet s(size());
  for (int v = 0; v < size(); ++v)
    if (y[v] != 0) s.add(v);
  return s;
}

namespace {

using std::uint64_t;

/// Gray-code walk over all subsets with incremental boundary mass and
/// out-volume; visit(mask, cut, vol) with cut = e(S, S^c).
template <typename F>
void subset_scan(const ScaledGraph& g, F&& visit) {
  const int n = g.n;
  const uint64_t count = uint64_t{1} << n;
  uint64_t mask = 0;
  std::int64_t cut = 0, vol = 0;
  visit(mask, cut, vol);
  for (uint64_t t = 1; t < count; ++t) {
    const int x = std::countr_zero(t);
    const uint64_t bx = uint64_t{1} << x;
    if (!(mask & bx)) {
      for (const auto& [v, w] : g.out_adj[x])
        if (v != x && !((mask >> v) & 1)) cut += w;
      for (const auto& [u, w] : g.in_adj[x])
        if (u != x && ((mask >> u) & 1)) cut -= w;
      mask |= bx;
      vol += g.out_deg[x];
    } else {
      for (const auto& [v, w] : g.out_adj[x])
        if (v != x && !((mask >> v) & 1)) cut -= w;
      for (const auto& [u, w] : g.in_adj[x])
        if (u != x && ((mask >> u) & 1)) cut += w;
      mask &= ~bx;
      vol -= g.out_deg[x];
    }
    visit(mask, cut, vol);
  }
}

/// Nested Gray-code walk over ordered pairs (S, T). e(S,T) is maintained
/// incrementally through the per-vertex mass-from-S array.
/// visit(sm, tm, volS, volT, est) with volS out-volume, volT in-volume.
template <typename F>
void pair_scan(const ScaledGraph& g, F&& visit) {
  const int n = g.n;
  const uint64_t count = uint64_t{1} << n;
  std::vector<std::int64_t> from_s(n, 0);
  uint64_t sm = 0;
  std::int64_t vol_s = 0;
  for (uint64_t ts = 0; ts < count; ++ts) {
    if (ts) {
      const int x = std::countr_zero(ts);
      const uint64_t bx = uint64_t{1} << x;
      if (!(sm & bx)) {
        for (const auto& [v, w] : g.out_adj[x]) from_s[v] += w;
        sm |= bx;
        vol_s += g.out_deg[x];
      } else {
        for (const auto& [v, w] : g.out_adj[x]) from_s[v] -= w;
        sm &= ~bx;
        vol_s -= g.out_deg[x];
      }
    }
    uint64_t tm = 0;
    std::int64_t vol_t = 0, est = 0;
    visit(sm, tm, vol_s, vol_t, est);
    for (uint64_t tt = 1; tt < count; ++tt) {
      const int x = std::countr_zero(tt);
      const uint64_t bx = uint64_t{1} << x;
      if (!(tm & bx)) {
        est += from_s[x];
        vol_t += g.in_deg[x];
        tm |= bx;
      } else {
        est -= from_s[x];
        vol_t -= g.in_deg[x];
        tm &= ~bx;
      }
      visit(sm, tm, vol_s, vol_t, est);
    }
  }
}

/// Running minimum of nonnegative fractions with a lexicographic witness
/// tie-break, so the result matches increasing-bitmask first-encounter.
struct BestFrac {
  bool set = false;
  std::int64_t num = 0, den = 1;
  uint64_t wa = 0, wb = 0;

  void offer(std::int64_t n2, std::int64_t d2, uint64_t a2, uint64_t b2) {
    if (!set) {
      set = true;
      num = n2, den = d2, wa = a2, wb = b2;
      return;
    }
    if (frac_less(n2, d2, num, den) ||
        (frac_eq(n2, d2, num, den) && (a2 < wa || (a2 == wa && b2 < wb)))) {
      num = n2, den = d2, wa = a2, wb = b2;
    }
  }
};

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Rat phi(const Digraph& g, const VertexSet& s) {
  require(s.universe() == g.size(), "phi: set universe mismatch");
  if (s.empty()) throw std::invalid_argument("phi: empty set");
  Rat num;
  for (const Edge& e : g.edges())
    if (s.contains(e.from) && !s.contains(e.to)) num += e.weight;
  Rat den = g.volume(s, Side::Out);
  if (den.is_zero()) throw std::invalid_argument("phi: zero-volume set");
  return num / den;
}

CutPair phi_dir(const Digraph& g, const VertexSet& s, const VertexSet& t) {
  require(s.universe() == g.size() && t.universe() == g.size(),
          "phi_dir: set universe mismatch");
  Rat num;
  for (const Edge& e : g.edges()) {
    if (s.contains(e.from) && !t.contains(e.to)) num += e.weight;
    if (!s.contains(e.from) && t.contains(e.to)) num += e.weight;
  }
  Rat den = g.volume(s, Side::Out) + g.volume(t, Side::In);
  if (den.is_zero()) throw std::invalid_argument("phi_dir: both sets have zero volume");
  return CutPair{s, t, num, den, num / den};
}

std::pair<Rat, VertexSet> min_phi(const Digraph& g, const ExactLimits& limits) {
  const int n = g.size();
  if (n > limits.subset_n) throw CapExceeded("min_phi: vertex count above subset cap");
  ScaledGraph sg = ScaledGraph::build(g);
  const std::int64_t total = sg.total;
  BestFrac best;
  subset_scan(sg, [&](uint64_t mask, std::int64_t cut, std::int64_t vol) {
    if (vol <= 0 || 2 * vol > total) return;
    best.offer(cut, vol, mask, 0);
  });
  if (!best.set) throw std::invalid_argument("min_phi: no feasible set");
  VertexSet witness = VertexSet::from_mask(n, best.wa);
  Rat value = phi(g, witness);
  if (value != sg.ratio(best.num, best.den))
    throw std::logic_error("min_phi: scan and direct evaluation disagree");
  return {value, witness};
}

namespace {

CutPair finish_pair(const Digraph& g, const ScaledGraph& sg, const BestFrac& best,
                    const char* who) {
  VertexSet s = VertexSet::from_mask(g.size(), best.wa);
  VertexSet t = VertexSet::from_mask(g.size(), best.wb);
  CutPair cut = phi_dir(g, s, t);
  if (cut.value != sg.ratio(best.num, best.den))
    throw std::logic_error(std::string(who) + ": scan and direct evaluation disagree");
  return cut;
}

}  // namespace

CutPair min_phi_dir(const Digraph& g, const ExactLimits& limits) {
  const int n = g.size();
  if (n > limits.pair_n) throw CapExceeded("min_phi_dir: vertex count above pair cap");
  ScaledGraph sg = ScaledGraph::build(g);
  const std::int64_t total = sg.total;
  BestFrac best;
  pair_scan(sg, [&](uint64_t sm, uint64_t tm, std::int64_t vol_s, std::int64_t vol_t,
                    std::int64_t est) {
    const std::int64_t den = vol_s + vol_t;
    if (den <= 0 || den > total) return;
    best.offer(den - 2 * est, den, sm, tm);
  });
  if (!best.set) throw std::invalid_argument("min_phi_dir: no feasible pair");
  return finish_pair(g, sg, best, "min_phi_dir");
}

// The balanced minimum keeps the volume constraint of the unbalanced one.
// Without it the minimum is not monotone: on the triangle, the pair
// S={0,1}, T={0,2} has volume 8 > vol(V) = 6 and value 1/4 below the
// unconstrained directed conductance 1/3, and the balancing argument
// (which shrinks a volume-feasible minimizer) never produces such pairs.
// The constraint also excludes the trivial (V, V) pair.
CutPair min_phi_dir_balanced(const Digraph& g, const ExactLimits& limits) {
  const int n = g.size();
  if (n > limits.pair_n)
    throw CapExceeded("min_phi_dir_balanced: vertex count above pair cap");
  ScaledGraph sg = ScaledGraph::build(g);
  const std::int64_t total = sg.total;
  BestFrac best;
  pair_scan(sg, [&](uint64_t sm, uint64_t tm, std::int64_t vol_s, std::int64_t vol_t,
                    std::int64_t est) {
    if (std::popcount(sm) != std::popcount(tm)) return;
    const std::int64_t den = vol_s + vol_t;
    if (den <= 0 || den > total) return;
    best.offer(den - 2 * est, den, sm, tm);
  });
  if (!best.set) throw std::invalid_argument("min_phi_dir_balanced: no feasible pair");
  return finish_pair(g, sg, best, "min_phi_dir_balanced");
}

CutPair min_beta_dir(const Digraph& g, const ExactLimits& limits) {
  const int n = g.size();
  if (n > limits.pair_n) throw CapExceeded("min_beta_dir: vertex count above pair cap");
  ScaledGraph sg = ScaledGraph::build(g);
  const std::int64_t total = sg.total;
  BestFrac best;
  pair_scan(sg, [&](uint64_t sm, uint64_t tm, std::int64_t vol_s, std::int64_t vol_t,
                    std::int64_t est) {
    if (sm & tm) return;
    const std::int64_t den = vol_s + vol_t;
    if (den <= 0 || den > total) return;
    best.offer(den - 2 * est, den, sm, tm);
  });
  if (!best.set) throw std::invalid_argument("min_beta_dir: no feasible pair");
  return finish_pair(g, sg, best, "min_beta_dir");
}

Rat beta_sign(const Digraph& g, const SignVector& y) {
  require(y.size() == g.size(), "beta_sign: size mismatch");
  if (!g.undirected_flag()) throw std::invalid_argument("beta_sign: directed input");
  if (y.all_zero()) throw std::invalid_argument("beta_sign: zero vector");

  Rat num1, den1;
  for (const Edge& e : g.edges())
    num1 += e.weight * Rat(std::abs(y.y[e.from] + y.y[e.to]));
  for (int v = 0; v < g.size(); ++v)
    den1 += g.out_degree(v) * Rat(std::abs(y.y[v]));
  den1 *= Rat(2);
  if (den1.is_zero()) throw std::invalid_argument("beta_sign: zero-volume support");

  VertexSet a = y.plus_set(), b = y.minus_set(), s = y.support();
  Rat num2 = g.edge_mass(a, a) + g.edge_mass(b, b) + g.edge_mass(s, s.complement());
  Rat den2 = g.volume(s, Side::Out);
  if (num1 / den1 != num2 / den2)
    throw std::logic_error("beta_sign: the two formulas disagree");
  return num1 / den1;
}

std::pair<Rat, SignVector> min_beta(const Digraph& g, const ExactLimits& limits) {
  const int n = g.size();
  if (n > limits.sign_n) throw CapExceeded("min_beta: vertex count above sign cap");
  if (!g.undirected_flag()) throw std::invalid_argument("min_beta: directed input");
  ScaledGraph sg = ScaledGraph::build(g);

  std::vector<std::int8_t> y(n, -1);  // digit 0 of the ternary odometer
  std::vector<int> digit(n, 0);
  BestFrac best;
  std::vector<std::int8_t> best_y;
  uint64_t index = 0;
  const uint64_t count = [&] {
    uint64_t c = 1;
    for (int i = 0; i < n; ++i) c *= 3;
    return c;
  }();
  for (index = 0; index < count; ++index) {
    if (index) {
      int pos = 0;
      while (digit[pos] == 2) {
        digit[pos] = 0;
        y[pos] = -1;
        ++pos;
      }
      ++digit[pos];
      y[pos] = static_cast<std::int8_t>(digit[pos] - 1);
    }
    std::int64_t num = 0, den = 0;
    for (const auto& e : sg.edges) num += e.w * std::abs(y[e.from] + y[e.to]);
    for (int v = 0; v < n; ++v)
      if (y[v] != 0) den += sg.out_deg[v];
    den *= 2;
    if (den <= 0) continue;
    if (!best.set || frac_less(num, den, best.num, best.den)) {
      best.set = true;
      best.num = num;
      best.den = den;
      best_y = y;
    }
  }
  if (!best.set) throw std::invalid_argument("min_beta: no feasible sign vector");
  SignVector witness(n);
  witness.y = best_y;
  Rat value = beta_sign(g, witness);
  if (value != sg.ratio(best.num, best.den))
    throw std::logic_error("min_beta: scan and direct evaluation disagree");
  return {value, witness};
}

// ---------------------------------------------------------------------------
// k-way machinery.
// ---------------------------------------------------------------------------

namespace {

/// Best pair value over non-empty S in sm, T in tm, after the
/// subset-closure relaxation. den == 0 means no feasible pair.
struct TableEntry {
  std::int64_t num = 0, den = 0;
  std::uint32_t ws = 0, wt = 0;
};

bool entry_better(const TableEntry& a, const TableEntry& b) {
  if (a.den == 0) return false;
  if (b.den == 0) return true;
  if (frac_less(a.num, a.den, b.num, b.den)) return true;
  if (frac_less(b.num, b.den, a.num, a.den)) return false;
  return a.ws < b.ws || (a.ws == b.ws && a.wt < b.wt);
}

TableEntry entry_min(const TableEntry& a, const TableEntry& b) {
  return entry_better(b, a) ? b : a;
}

/// max over a family; den == 0 propagates as infeasible.
bool entry_max_accumulate(TableEntry& acc, const TableEntry& e) {
  if (e.den == 0) {
    acc.den = 0;
    return false;
  }
  if (acc.den == 0) return false;
  if (frac_less(acc.num, acc.den, e.num, e.den)) {
    acc.num = e.num;
    acc.den = e.den;
  }
  return true;
}

struct PairTables {
  int n = 0;
  std::vector<TableEntry> any;   // (sm << n) | tm
  std::vector<TableEntry> disj;  // same layout, S and T disjoint
  std::vector<TableEntry> eq;    // S = T, indexed by the common mask
};

PairTables build_pair_tables(const ScaledGraph& sg, bool want_constrained) {
  const int n = sg.n;
  const uint64_t side = uint64_t{1} << n;
  PairTables t;
  t.n = n;
  t.any.assign(side << n, TableEntry{});
  if (want_constrained) {
    t.disj.assign(side << n, TableEntry{});
    t.eq.assign(side, TableEntry{});
  }
  pair_scan(sg, [&](uint64_t sm, uint64_t tm, std::int64_t vol_s, std::int64_t vol_t,
                    std::int64_t est) {
    if (sm == 0 || tm == 0) return;
    const std::int64_t den = vol_s + vol_t;
    if (den <= 0) return;
    TableEntry e{den - 2 * est, den, static_cast<std::uint32_t>(sm),
                 static_cast<std::uint32_t>(tm)};
    TableEntry& slot = t.any[(sm << n) | tm];
    slot = entry_min(slot, e);
    if (want_constrained) {
      if ((sm & tm) == 0) {
        TableEntry& d = t.disj[(sm << n) | tm];
        d = entry_min(d, e);
      }
      if (sm == tm) {
        TableEntry& q = t.eq[sm];
        q = entry_min(q, e);
      }
    }
  });

  auto relax_2d = [&](std::vector<TableEntry>& table) {
    for (int b = 0; b < n; ++b) {
      const uint64_t bit = uint64_t{1} << b;
      for (uint64_t sm = 0; sm < side; ++sm) {
        if (!(sm & bit)) continue;
        const uint64_t lo = ((sm ^ bit) << n);
        const uint64_t hi = (sm << n);
        for (uint64_t tm = 0; tm < side; ++tm)
          table[hi | tm] = entry_min(table[hi | tm], table[lo | tm]);
      }
    }
    for (int b = 0; b < n; ++b) {
      const uint64_t bit = uint64_t{1} << b;
      for (uint64_t sm = 0; sm < side; ++sm) {
        const uint64_t row = sm << n;
        for (uint64_t tm = 0; tm < side; ++tm) {
          if (!(tm & bit)) continue;
          table[row | tm] = entry_min(table[row | tm], table[row | (tm ^ bit)]);
        }
      }
    }
  };
  relax_2d(t.any);
  if (want_constrained) {
    relax_2d(t.disj);
    for (int b = 0; b < n; ++b) {
      const uint64_t bit = uint64_t{1} << b;
      for (uint64_t m = 0; m < side; ++m)
        if (m & bit) t.eq[m] = entry_min(t.eq[m], t.eq[m ^ bit]);
    }
  }
  return t;
}

PartitionFamily assemble_family(const Digraph& g, const ScaledGraph& sg,
                                const std::vector<TableEntry>& picks) {
  PartitionFamily fam;
  fam.k = static_cast<int>(picks.size());
  for (const TableEntry& e : picks) {
    VertexSet s = VertexSet::from_mask(g.size(), e.ws);
    VertexSet t = VertexSet::from_mask(g.size(), e.wt);
    CutPair cut = phi_dir(g, s, t);
    if (cut.value != sg.ratio(e.num, e.den))
      throw std::logic_error("k-way: table and direct evaluation disagree");
    fam.s_sets.push_back(std::move(s));
    fam.t_sets.push_back(std::move(t));
    fam.values.push_back(cut.value);
  }
  fam.max_value = fam.values[0];
  for (const Rat& v : fam.values) fam.max_value = std::max(fam.max_value, v);
  return fam;
}

/// Lookup function for a per-block table entry; the two k-way minimizers
/// differ only in this.
template <typename Lookup>
PartitionFamily kway_minimize(const Digraph& g, const ScaledGraph& sg, int k,
                              Lookup&& entry_at) {
  const int n = sg.n;
  const uint64_t side = uint64_t{1} << n;
  const uint64_t full = side - 1;

  std::vector<TableEntry> best_pick;
  TableEntry best_val{};  // den == 0 until something feasible appears

  auto consider = [&](std::initializer_list<std::pair<uint64_t, uint64_t>> blocks) {
    TableEntry acc{0, 1, 0, 0};
    std::vector<TableEntry> picks;
    picks.reserve(blocks.size());
    for (const auto& [p, q] : blocks) {
      TableEntry e = entry_at(p, q);
      if (e.den == 0) return;
      // Only strict improvements replace the incumbent, so any block at or
      // above it makes the whole family uninteresting.
      if (best_val.den != 0 && !frac_less(e.num, e.den, best_val.num, best_val.den))
        return;
      picks.push_back(e);
      entry_max_accumulate(acc, e);
    }
    bool better = best_val.den == 0 || frac_less(acc.num, acc.den, best_val.num, best_val.den);
    if (better) {
      best_val = acc;
      best_pick = std::move(picks);
    }
  };

  if (k == 1) {
    consider({{full, full}});
  } else if (k == 2) {
    for (uint64_t p = 1; p < full; ++p)
      for (uint64_t q = 1; q < full; ++q)
        consider({{p, q}, {full ^ p, full ^ q}});
  } else {  // k == 3
    // Row minima give a cheap lower bound for pruning the S-partitions.
    std::vector<TableEntry> rowmin(side);
    for (uint64_t p = 0; p < side; ++p) {
      TableEntry m{};
      for (uint64_t q = 0; q < side; ++q) m = entry_min(m, entry_at(p, q));
      rowmin[p] = m;
    }
    auto row_lb_blocks_exceed = [&](std::initializer_list<uint64_t> ps) {
      if (best_val.den == 0) return false;
      for (uint64_t p : ps) {
        const TableEntry& m = rowmin[p];
        if (m.den == 0) return true;
        if (frac_less(best_val.num, best_val.den, m.num, m.den)) return true;
      }
      return false;
    };
    for (uint64_t p1 = 1; p1 < side; ++p1) {
      const uint64_t rest1 = full ^ p1;
      if (rest1 == 0) continue;
      for (uint64_t p2 = rest1; p2; p2 = (p2 - 1) & rest1) {
        const uint64_t p3 = rest1 ^ p2;
        if (p3 == 0) continue;
        if (row_lb_blocks_exceed({p1, p2, p3})) continue;
        for (uint64_t q1 = 1; q1 < side; ++q1) {
          const uint64_t qrest = full ^ q1;
          if (qrest == 0) continue;
          TableEntry e1 = entry_at(p1, q1);
          if (e1.den == 0) continue;
          if (best_val.den != 0 && frac_less(best_val.num, best_val.den, e1.num, e1.den))
            continue;
          for (uint64_t q2 = qrest; q2; q2 = (q2 - 1) & qrest) {
            const uint64_t q3 = qrest ^ q2;
            if (q3 == 0) continue;
            consider({{p1, q1}, {p2, q2}, {p3, q3}});
          }
        }
      }
    }
  }
  if (best_val.den == 0)
    throw std::invalid_argument("k-way: no feasible family of disjoint sets");
  return assemble_family(g, sg, best_pick);
}

void check_kway_pre(const Digraph& g, int k, const ExactLimits& limits) {
  if (k < 1 || k > limits.kmax)
    throw CapExceeded("k-way: k outside supported range");
  if (k > g.size()) throw std::invalid_argument("k-way: k larger than vertex count");
  if (g.size() > limits.kway_pair_n)
    throw CapExceeded("k-way: vertex count above k-way cap");
}

}  // namespace

PartitionFamily min_phi_k_dir(const Digraph& g, int k, const ExactLimits& limits) {
  check_kway_pre(g, k, limits);
  ScaledGraph sg = ScaledGraph::build(g);
  PairTables t = build_pair_tables(sg, false);
  const int n = sg.n;
  PartitionFamily fam = kway_minimize(
      g, sg, k, [&](uint64_t p, uint64_t q) { return t.any[(p << n) | q]; });
  fam.k = k;
  return fam;
}

PartitionFamily min_rho_k_dir(const Digraph& g, int k, const ExactLimits& limits) {
  check_kway_pre(g, k, limits);
  ScaledGraph sg = ScaledGraph::build(g);
  PairTables t = build_pair_tables(sg, true);
  const int n = sg.n;
  PartitionFamily fam = kway_minimize(g, sg, k, [&](uint64_t p, uint64_t q) {
    TableEntry d = t.disj[(p << n) | q];
    TableEntry e = t.eq[p & q];
    return entry_min(d, e);
  });
  fam.k = k;
  return fam;
}

DisjointFamily rho_k(const Digraph& g, int k, const ExactLimits& limits) {
  if (!g.undirected_flag()) throw std::invalid_argument("rho_k: directed input");
  if (k < 1 || k > limits.kmax) throw CapExceeded("rho_k: k outside supported range");
  if (k > g.size()) throw std::invalid_argument("rho_k: k larger than vertex count");
  const int n = g.size();
  if (n > limits.kway_set_n) throw CapExceeded("rho_k: vertex count above set cap");

  ScaledGraph sg = ScaledGraph::build(g);
  const uint64_t side = uint64_t{1} << n;
  const uint64_t full = side - 1;

  // best1[m]: min phi over non-empty positive-volume S inside m.
  std::vector<TableEntry> best1(side);
  subset_scan(sg, [&](uint64_t mask, std::int64_t cut, std::int64_t vol) {
    if (mask == 0 || vol <= 0) return;
    TableEntry e{cut, vol, static_cast<std::uint32_t>(mask), 0};
    best1[mask] = entry_min(best1[mask], e);
  });
  for (int b = 0; b < n; ++b) {
    const uint64_t bit = uint64_t{1} << b;
    for (uint64_t m = 0; m < side; ++m)
      if (m & bit) best1[m] = entry_min(best1[m], best1[m ^ bit]);
  }

  std::vector<TableEntry> best_pick;
  TableEntry best_val{};
  auto consider = [&](std::initializer_list<uint64_t> blocks) {
    TableEntry acc{0, 1, 0, 0};
    std::vector<TableEntry> picks;
    for (uint64_t m : blocks) {
      const TableEntry& e = best1[m];
      if (e.den == 0) return;
      picks.push_back(e);
      entry_max_accumulate(acc, e);
      if (best_val.den != 0 && frac_less(best_val.num, best_val.den, acc.num, acc.den))
        return;
    }
    if (best_val.den == 0 || frac_less(acc.num, acc.den, best_val.num, best_val.den)) {
      best_val = acc;
      best_pick = std::move(picks);
    }
  };

  if (k == 1) {
    consider({full});
  } else if (k == 2) {
    for (uint64_t m = 1; m < full; ++m) consider({m, full ^ m});
  } else {
    for (uint64_t p1 = 1; p1 < side; ++p1) {
      const uint64_t rest = full ^ p1;
      if (rest == 0) continue;
      if (best_val.den != 0 && best1[p1].den != 0 &&
          frac_less(best_val.num, best_val.den, best1[p1].num, best1[p1].den))
        continue;
      for (uint64_t p2 = rest; p2; p2 = (p2 - 1) & rest) {
        const uint64_t p3 = rest ^ p2;
        if (p3 == 0) continue;
        consider({p1, p2, p3});
      }
    }
  }
  if (best_val.den == 0)
    throw std::invalid_argument("rho_k: no feasible family");

  DisjointFamily fam;
  fam.k = k;
  for (const TableEntry& e : best_pick) {
    VertexSet s = VertexSet::from_mask(n, e.ws);
    Rat v = phi(g, s);
    if (v != sg.ratio(e.num, e.den))
      throw std::logic_error("rho_k: scan and direct evaluation disagree");
    fam.sets.push_back(std::move(s));
    fam.values.push_back(v);
  }
  fam.max_value = fam.values[0];
  for (const Rat& v : fam.values) fam.max_value = std::max(fam.max_value, v);
  return fam;
}

// ---------------------------------------------------------------------------
// Vertex expansion.
// ---------------------------------------------------------------------------

namespace {

struct SizeMin {
  std::int64_t count = std::numeric_limits<std::int64_t>::max();
  uint64_t mask = 0;

  void offer(std::int64_t c, uint64_t m) {
    if (c < count || (c == count && m < mask)) {
      count = c;
      mask = m;
    }
  }
  void merge(const SizeMin& o) {
    if (o.count < count || (o.count == count && o.mask < mask)) *this = o;
  }
};

struct VertexScanResult {
  std::vector<SizeMin> neighbors;      // by |S|
  std::vector<SizeMin> neighbors_out;  // |N+(S)\S| by |S|
};

/// Walks gray(t) for t in [lo, hi), maintaining per-target cover counts.
VertexScanResult vertex_scan_range(const std::vector<std::vector<int>>& adj, int n,
                                   uint64_t lo, uint64_t hi) {
  VertexScanResult res;
  res.neighbors.assign(n + 1, SizeMin{});
  res.neighbors_out.assign(n + 1, SizeMin{});

  std::vector<std::int32_t> cnt(n, 0);
  uint64_t mask = lo ^ (lo >> 1);
  int covered = 0, covered_outside = 0, size = std::popcount(mask);
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1)
      for (int u : adj[v]) ++cnt[u];
  for (int u = 0; u < n; ++u)
    if (cnt[u] > 0) {
      ++covered;
      if (!((mask >> u) & 1)) ++covered_outside;
    }

  for (uint64_t t = lo;; ++t) {
    if (size >= 1) {
      res.neighbors[size].offer(covered, mask);
      res.neighbors_out[size].offer(covered_outside, mask);
    }
    if (t + 1 >= hi) break;
    const int x = std::countr_zero(t + 1);
    const uint64_t bx = uint64_t{1} << x;
    if (!(mask & bx)) {
      if (cnt[x] > 0) --covered_outside;
      mask |= bx;
      ++size;
      for (int u : adj[x]) {
        if (cnt[u]++ == 0) {
          ++covered;
          if (!((mask >> u) & 1)) ++covered_outside;
        }
      }
    } else {
      for (int u : adj[x]) {
        if (--cnt[u] == 0) {
          --covered;
          if (!((mask >> u) & 1)) --covered_outside;
        }
      }
      mask &= ~bx;
      --size;
      if (cnt[x] > 0) ++covered_outside;
    }
  }
  return res;
}

}  // namespace

ExpansionProfile vertex_expansion(const Digraph& g, int bound, const ExactLimits& limits,
                                  int threads) {
  const int n = g.size();
  if (n > limits.vertex_n)
    throw CapExceeded("vertex_expansion: vertex count above cap");
  if (bound < 1 || bound > n)
    throw std::invalid_argument("vertex_expansion: bound out of range");
  auto d = g.regular_degree();
  if (!d || d->is_zero())
    throw std::invalid_argument("vertex_expansion: graph is not regular");

  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : g.edges()) adj[e.from].push_back(e.to);

  const uint64_t count = uint64_t{1} << n;
  int workers = n >= 22 ? resolve_threads(threads) : 1;
  std::vector<VertexScanResult> parts(workers);
  if (workers == 1) {
    parts[0] = vertex_scan_range(adj, n, 0, count);
  } else {
    std::vector<std::thread> pool;
    const uint64_t chunk = count / workers;
    for (int w = 0; w < workers; ++w) {
      uint64_t lo = w * chunk;
      uint64_t hi = (w + 1 == workers) ? count : lo + chunk;
      pool.emplace_back(
          [&, w, lo, hi] { parts[w] = vertex_scan_range(adj, n, lo, hi); });
    }
    for (auto& th : pool) th.join();
  }

  ExpansionProfile out;
  out.n = n;
  out.bound = bound;
  out.min_neighbors.assign(n + 1, 0);
  out.min_neighbors_out.assign(n + 1, 0);
  out.argmin_neighbors.assign(n + 1, 0);
  out.argmin_neighbors_out.assign(n + 1, 0);

  std::vector<SizeMin> nb(n + 1), nbo(n + 1);
  for (const auto& part : parts)
    for (int s = 1; s <= n; ++s) {
      nb[s].merge(part.neighbors[s]);
      nbo[s].merge(part.neighbors_out[s]);
    }
  for (int s = 1; s <= n; ++s) {
    out.min_neighbors[s] = nb[s].count;
    out.argmin_neighbors[s] = nb[s].mask;
    out.min_neighbors_out[s] = nbo[s].count;
    out.argmin_neighbors_out[s] = nbo[s].mask;
  }

  bool have = false;
  std::int64_t dn = 0, dd = 1;
  uint64_t dw = 0;
  for (int s = 1; s <= bound; ++s) {
    if (!have || frac_less(nb[s].count, s, dn, dd)) {
      have = true;
      dn = nb[s].count;
      dd = s;
      dw = nb[s].mask;
    }
  }
  out.delta = Rat(static_cast<long>(dn - dd), static_cast<long>(dd));
  out.delta_witness = VertexSet::from_mask(n, dw);

  have = false;
  std::int64_t mn = 0, md = 1;
  uint64_t mw = 0;
  for (int s = 1; s <= bound; ++s) {
    if (!have || frac_less(nbo[s].count, s, mn, md)) {
      have = true;
      mn = nbo[s].count;
      md = s;
      mw = nbo[s].mask;
    }
  }
  out.delta_prime = Rat(static_cast<long>(mn), static_cast<long>(md));
  out.magnifier_witness = VertexSet::from_mask(n, mw);
  return out;
}

}  // namespace svx
