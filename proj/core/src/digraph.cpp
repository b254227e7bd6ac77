#include "svx/digraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace svx {

namespace {

const Rat kZero = Rat(0);

std::vector<Edge> merge_edges(int n, const std::vector<Edge>& raw) {
  std::map<std::pair<int, int>, Rat> acc;
  for (const Edge& e : raw) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
      throw std::out_of_range("Digraph: edge endpoint out of range");
    if (e.weight.sign() < 0) throw std::invalid_argument("Digraph: negative edge weight");
    if (e.weight.is_zero()) continue;
    acc[{e.from, e.to}] += e.weight;
  }
  std::vector<Edge> out;
  out.reserve(acc.size());
  for (auto& [key, w] : acc) out.push_back({key.first, key.second, w});
  return out;
}

}  // namespace

Digraph::Digraph(int n, bool undirected, std::vector<Edge> merged)
    : n_(n), undirected_(undirected), edges_(std::move(merged)) {
  if (n <= 0) throw std::invalid_argument("Digraph: need at least one vertex");
  out_.resize(n);
  in_.resize(n);
  out_deg_.assign(n, Rat(0));
  in_deg_.assign(n, Rat(0));
  for (const Edge& e : edges_) {
    out_[e.from].push_back({e.to, e.weight});
    in_[e.to].push_back({e.from, e.weight});
    out_deg_[e.from] += e.weight;
    in_deg_[e.to] += e.weight;
    total_ += e.weight;
  }
  for (auto& adj : in_) std::sort(adj.begin(), adj.end(), [](auto& a, auto& b) { return a.first < b.first; });
}

Digraph Digraph::directed(int n, const std::vector<Edge>& edges) {
  return Digraph(n, false, merge_edges(n, edges));
}

Digraph Digraph::undirected(int n, const std::vector<Edge>& edges) {
  std::vector<Edge> both;
  both.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    both.push_back(e);
    if (e.from != e.to) both.push_back({e.to, e.from, e.weight});
  }
  return Digraph(n, true, merge_edges(n, both));
}

const Rat& Digraph::weight(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::out_of_range("Digraph: vertex out of range");
  const auto& adj = out_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const auto& p, int key) { return p.first < key; });
  if (it != adj.end() && it->first == v) return it->second;
  return kZero;
}

const Rat& Digraph::out_degree(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Digraph: vertex out of range");
  return out_deg_[v];
}

const Rat& Digraph::in_degree(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Digraph: vertex out of range");
  return in_deg_[v];
}

Rat Digraph::volume(const VertexSet& s, Side side) const {
  if (s.universe() != n_) throw std::invalid_argument("Digraph: set universe mismatch");
  Rat vol;
  for (int v = 0; v < n_; ++v)
    if (s.contains(v)) vol += (side == Side::Out ? out_deg_[v] : in_deg_[v]);
  return vol;
}

Rat Digraph::edge_mass(const VertexSet& a, const VertexSet& b) const {
  if (a.universe() != n_ || b.universe() != n_)
    throw std::invalid_argument("Digraph: set universe mismatch");
  Rat mass;
  for (const Edge& e : edges_)
    if (a.contains(e.from) && b.contains(e.to)) mass += e.weight;
  return mass;
}

bool Digraph::is_eulerian(double tol) const {
  for (int v = 0; v < n_; ++v) {
    if (tol == 0.0) {
      if (out_deg_[v] != in_deg_[v]) return false;
    } else {
      double dout = out_deg_[v].to_double();
      double din = in_deg_[v].to_double();
      double bound = tol * std::max(1.0, dout + din);
      if (std::abs(dout - din) > bound) return false;
    }
  }
  return true;
}

bool Digraph::strongly_connected() const {
  auto reach = [&](bool forward) {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      const auto& adj = forward ? out_[v] : in_[v];
      for (const auto& [u, w] : adj) {
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
      }
    }
    return count == n_;
  };
  return reach(true) && reach(false);
}

std::optional<Rat> Digraph::regular_degree() const {
  const Rat& d = out_deg_[0];
  for (int v = 0; v < n_; ++v)
    if (out_deg_[v] != d || in_deg_[v] != d) return std::nullopt;
  return d;
}

std::vector<std::uint64_t> Digraph::out_support_masks() const {
  if (n_ > 64) throw std::out_of_range("Digraph: support masks need n <= 64");
  std::vector<std::uint64_t> masks(n_, 0);
  for (const Edge& e : edges_) masks[e.from] |= std::uint64_t{1} << e.to;
  return masks;
}

const std::vector<std::pair<int, Rat>>& Digraph::out_neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Digraph: vertex out of range");
  return out_[v];
}

const std::vector<std::pair<int, Rat>>& Digraph::in_neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Digraph: vertex out of range");
  return in_[v];
}

bool operator==(const Digraph& a, const Digraph& b) {
  if (a.n_ != b.n_ || a.undirected_ != b.undirected_) return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  for (size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.from != y.from || x.to != y.to || x.weight != y.weight) return false;
  }
  return true;
}

std::vector<Rat> stationary_distribution_exact(const Digraph& g) {
  const int n = g.size();
  for (int v = 0; v < n; ++v)
    if (g.out_degree(v).is_zero())
      throw std::invalid_argument("stationary distribution: vertex with zero out-degree");
  if (!g.strongly_connected())
    throw std::invalid_argument("stationary distribution: graph not strongly connected");

  // Rows 0..n-2: (W^T - I) x = 0; last row: sum(x) = 1.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1, Rat(0)));
  for (int r = 0; r < n - 1; ++r) {
    for (const auto& [u, w] : g.in_neighbors(r)) m[r][u] += w / g.out_degree(u);
    m[r][r] -= Rat(1);
  }
  for (int c = 0; c < n; ++c) m[n - 1][c] = Rat(1);
  m[n - 1][n] = Rat(1);

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::runtime_error("stationary distribution: singular system");
    std::swap(m[col], m[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rat f = m[r][col] / m[col][col];
      for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Rat> pi(n);
  for (int v = 0; v < n; ++v) {
    pi[v] = m[v][n] / m[v][v];
    if (pi[v].sign() <= 0)
      throw std::runtime_error("stationary distribution: non-positive entry");
  }
  return pi;
}

Digraph eulerianize(const Digraph& g) {
  const int n = g.size();
  for (int v = 0; v < n; ++v)
    if (g.out_degree(v).is_zero())
      throw std::invalid_argument("eulerianize: vertex with zero out-degree");
  if (!g.strongly_connected())
    throw std::invalid_argument("eulerianize: graph not strongly connected");

  std::vector<Rat> pi;
  if (n <= 64) {
    pi = stationary_distribution_exact(g);
  } else {
    // Dense double solve; adequate for the spectral-only regime.
    std::vector<std::vector<double>> m(n, std::vector<double>(n + 1, 0.0));
    for (int r = 0; r < n - 1; ++r) {
      for (const auto& [u, w] : g.in_neighbors(r))
        m[r][u] += w.to_double() / g.out_degree(u).to_double();
      m[r][r] -= 1.0;
    }
    for (int c = 0; c < n; ++c) m[n - 1][c] = 1.0;
    m[n - 1][n] = 1.0;
    for (int col = 0; col < n; ++col) {
      int pivot = col;
      for (int r = col + 1; r < n; ++r)
        if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
      std::swap(m[col], m[pivot]);
      if (m[col][col] == 0.0) throw std::runtime_error("eulerianize: singular system");
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        double f = m[r][col] / m[col][col];
        if (f == 0.0) continue;
        for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
      }
    }
    pi.resize(n);
    for (int v = 0; v < n; ++v) pi[v] = Rat::from_double(m[v][n] / m[v][v]);
  }

  std::vector<Edge> out;
  out.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    out.push_back({e.from, e.to, pi[e.from] * e.weight / g.out_degree(e.from)});
  return Digraph::directed(n, out);
}

Digraph undirectify(const Digraph& g) {
  const int n = g.size();
  std::vector<Edge> half;
  for (const Edge& e : g.edges()) {
    if (e.from > e.to) continue;  // the (to, from) direction is folded in below
    if (e.from == e.to) {
      half.push_back({e.from, e.to, e.weight});
    } else {
      Rat w = (e.weight + g.weight(e.to, e.from)) / Rat(2);
      half.push_back({e.from, e.to, w});
    }
  }
  for (const Edge& e : g.edges()) {
    // Pairs present only in the (from > to) direction.
    if (e.from > e.to && g.weight(e.to, e.from).is_zero())
      half.push_back({e.to, e.from, e.weight / Rat(2)});
  }
  return Digraph::undirected(n, half);
}

Digraph symmetric_lift(const Digraph& g) {
  const int n = g.size();
  std::vector<Edge> lift;
  lift.reserve(g.edges().size());
  for (const Edge& e : g.edges()) lift.push_back({e.from, n + e.to, e.weight});
  return Digraph::undirected(2 * n, lift);
}

LiftSet lift_project(int n, const VertexSet& lift_subset) {
  if (lift_subset.universe() != 2 * n)
    throw std::invalid_argument("lift_project: subset universe is not 2n");
  LiftSet out{VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v) {
    if (lift_subset.contains(v)) out.left.add(v);
    if (lift_subset.contains(n + v)) out.right.add(v);
  }
  return out;
}

VertexSet lift_embed(const LiftSet& s) {
  const int n = s.left.universe();
  if (s.right.universe() != n) throw std::invalid_argument("lift_embed: halves disagree on n");
  VertexSet out(2 * n);
  for (int v = 0; v < n; ++v) {
    if (s.left.contains(v)) out.add(v);
    if (s.right.contains(v)) out.add(n + v);
  }
  return out;
}

}  // namespace svx
