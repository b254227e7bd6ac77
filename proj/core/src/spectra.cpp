#include "svx/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace svx {

bool DenseMatrix::symmetric(double tol) const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(at(i, j) - at(j, i)) > tol * std::max(1.0, std::abs(at(i, j))))
        return false;
  return true;
}

double DenseMatrix::frobenius() const {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

namespace {

double off_diagonal_norm(const DenseMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (i != j) s += m.at(i, j) * m.at(i, j);
  return std::sqrt(s);
}

/// One Jacobi rotation zeroing a(p,q), accumulating into vecs columns.
void rotate(DenseMatrix& a, std::vector<double>* vecs_colmajor, int p, int q) {
  const double apq = a.at(p, q);
  if (apq == 0.0) return;
  const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  const double app = a.at(p, p), aqq = a.at(q, q);
  a.at(p, p) = app - t * apq;
  a.at(q, q) = aqq + t * apq;
  a.at(p, q) = a.at(q, p) = 0.0;
  for (int k = 0; k < a.n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a.at(k, p), akq = a.at(k, q);
    a.at(k, p) = a.at(p, k) = akp - s * (akq + tau * akp);
    a.at(k, q) = a.at(q, k) = akq + s * (akp - tau * akq);
  }
  if (vecs_colmajor) {
    std::vector<double>& v = *vecs_colmajor;
    const int n = a.n;
    for (int k = 0; k < n; ++k) {
      const double vkp = v[static_cast<size_t>(k) * n + p];
      const double vkq = v[static_cast<size_t>(k) * n + q];
      v[static_cast<size_t>(k) * n + p] = vkp - s * (vkq + tau * vkp);
      v[static_cast<size_t>(k) * n + q] = vkq + s * (vkp - tau * vkq);
    }
  }
}

}  // namespace

EigenSystem symmetric_eigen(const DenseMatrix& input, bool want_vectors) {
  if (!input.symmetric())
    throw std::invalid_argument("symmetric_eigen: input matrix is not symmetric");
  const int n = input.n;
  DenseMatrix a = input;
  std::vector<double> v;
  if (want_vectors) {
    v.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;
  }

  const double target = 1e-10 * std::max(input.frobenius(), 1e-300);
  bool converged = false;
  for (int sweep = 0; sweep < 64; ++sweep) {
    if (off_diagonal_norm(a) <= target) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) rotate(a, want_vectors ? &v : nullptr, p, q);
  }
  if (!converged && off_diagonal_norm(a) > target)
    throw std::runtime_error("symmetric_eigen: no convergence after 64 sweeps");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a.at(i, i) > a.at(j, j); });

  EigenSystem out;
  out.values.resize(n);
  for (int k = 0; k < n; ++k) out.values[k] = a.at(order[k], order[k]);

  if (want_vectors) {
    out.vectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
      std::vector<double>& vec = out.vectors[k];
      for (int i = 0; i < n; ++i) vec[i] = v[static_cast<size_t>(i) * n + order[k]];
      // Deterministic sign: largest-magnitude coordinate positive.
      int arg = 0;
      for (int i = 1; i < n; ++i)
        if (std::abs(vec[i]) > std::abs(vec[arg])) arg = i;
      if (vec[arg] < 0)
        for (double& x : vec) x = -x;
    }
    double res = 0.0;
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        double av = 0.0;
        for (int j = 0; j < n; ++j) av += input.at(i, j) * out.vectors[k][j];
        res = std::max(res, std::abs(av - out.values[k] * out.vectors[k][i]));
      }
    }
    out.residual = res;
  }
  return out;
}

DenseMatrix normalized_adjacency(const Digraph& g) {
  if (!g.is_eulerian())
    throw std::invalid_argument("normalized_adjacency: graph is not Eulerian");
  const int n = g.size();
  std::vector<double> inv_sqrt_d(n);
  for (int v = 0; v < n; ++v) {
    double d = g.out_degree(v).to_double();
    if (d <= 0.0)
      throw std::invalid_argument("normalized_adjacency: vertex with zero degree");
    inv_sqrt_d[v] = 1.0 / std::sqrt(d);
  }
  DenseMatrix a(n);
  for (const Edge& e : g.edges())
    a.at(e.from, e.to) = e.weight.to_double() * inv_sqrt_d[e.from] * inv_sqrt_d[e.to];
  return a;
}

namespace {

/// Lift adjacency is assembled directly so the matrix is exactly
/// symmetric: block [0 A; A^T 0] with A(u,v) = w(u,v)/sqrt(d+(u) d-(v)).
DenseMatrix lift_normalized_adjacency(const Digraph& g) {
  const int n = g.size();
  std::vector<double> inv_sqrt_out(n), inv_sqrt_in(n);
  for (int v = 0; v < n; ++v) {
    double dout = g.out_degree(v).to_double();
    double din = g.in_degree(v).to_double();
    if (dout <= 0.0 || din <= 0.0)
      throw std::invalid_argument("singular values: vertex with zero degree");
    inv_sqrt_out[v] = 1.0 / std::sqrt(dout);
    inv_sqrt_in[v] = 1.0 / std::sqrt(din);
  }
  DenseMatrix a(2 * n);
  for (const Edge& e : g.edges()) {
    double x = e.weight.to_double() * inv_sqrt_out[e.from] * inv_sqrt_in[e.to];
    a.at(e.from, n + e.to) = x;
    a.at(n + e.to, e.from) = x;
  }
  return a;
}

}  // namespace

Spectrum singular_values(const Digraph& g) {
  if (!g.is_eulerian())
    throw std::invalid_argument("singular_values: graph is not Eulerian");
  const int n = g.size();
  EigenSystem lift = symmetric_eigen(lift_normalized_adjacency(g), true);

  // Lift eigenvalues must be symmetric about zero.
  for (int k = 0; k < 2 * n; ++k) {
    double mirrored = -lift.values[2 * n - 1 - k];
    if (std::abs(lift.values[k] - mirrored) > 1e-8)
      throw std::runtime_error("singular_values: lift spectrum is not sign-symmetric");
  }

  Spectrum out;
  out.sigmas.assign(lift.values.begin(), lift.values.begin() + n);
  out.residual = lift.residual;
  if (out.sigmas.front() > 1.0 + 1e-9 || out.sigmas.back() < -1e-9)
    throw std::runtime_error("singular_values: spectrum escapes [0, 1]");

  if (g.undirected_flag()) {
    EigenSystem direct = symmetric_eigen(normalized_adjacency(g), true);
    out.mus = direct.values;
    out.residual = std::max(out.residual, direct.residual);
    // {sigma_i} must equal {|mu_j|} as multisets.
    std::vector<double> abs_mu(direct.values.size());
    for (size_t i = 0; i < abs_mu.size(); ++i) abs_mu[i] = std::abs(direct.values[i]);
    std::sort(abs_mu.begin(), abs_mu.end(), std::greater<>());
    for (int k = 0; k < n; ++k)
      if (std::abs(out.sigmas[k] - abs_mu[k]) > 1e-8)
        throw std::runtime_error(
            "singular_values: singular values disagree with |eigenvalues|");
  }
  return out;
}

SingularPair second_singular_pair(const Digraph& g) {
  const int n = g.size();
  if (n < 2)
    throw std::invalid_argument("second_singular_pair: need at least two vertices");
  if (!g.is_eulerian())
    throw std::invalid_argument("second_singular_pair: graph is not Eulerian");

  EigenSystem lift = symmetric_eigen(lift_normalized_adjacency(g), true);
  const double sigma2 = lift.values[1];

  // Exact top eigenvector d^{1/2} of the lift, for projecting degenerate
  // clusters away from the trivial direction.
  std::vector<double> top(2 * n);
  for (int v = 0; v < n; ++v) {
    top[v] = std::sqrt(g.out_degree(v).to_double());
    top[n + v] = std::sqrt(g.in_degree(v).to_double());
  }
  double top_norm = std::sqrt(std::inner_product(top.begin(), top.end(), top.begin(), 0.0));
  for (double& x : top) x /= top_norm;

  auto split = [&](const std::vector<double>& vec, std::vector<double>& l,
                   std::vector<double>& r) {
    l.assign(vec.begin(), vec.begin() + n);
    r.assign(vec.begin() + n, vec.end());
    auto norm = [](const std::vector<double>& x) {
      return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    };
    return std::pair<double, double>{norm(l), norm(r)};
  };

  std::vector<std::vector<double>> cluster;
  for (int k = 0; k < 2 * n; ++k) {
    if (std::abs(lift.values[k] - sigma2) > 1e-8) continue;
    std::vector<double> vec = lift.vectors[k];
    double dot = std::inner_product(vec.begin(), vec.end(), top.begin(), 0.0);
    for (int i = 0; i < 2 * n; ++i) vec[i] -= dot * top[i];
    double norm = std::sqrt(std::inner_product(vec.begin(), vec.end(), vec.begin(), 0.0));
    if (norm < 1e-10) continue;  // the trivial direction itself
    for (double& x : vec) x /= norm;
    cluster.push_back(std::move(vec));
  }
  if (cluster.empty())
    throw std::runtime_error("second_singular_pair: no usable eigenvector in cluster");

  SingularPair out;
  out.sigma2 = sigma2;
  std::vector<double> l, r;
  for (const auto& vec : cluster) {
    auto [nl, nr] = split(vec, l, r);
    if (nl > 1e-8 && nr > 1e-8) {
      for (double& x : l) x /= nl;
      for (double& x : r) x /= nr;
      out.left = l;
      out.right = r;
      return out;
    }
  }
  // sigma2 ~ 0: the lift null space splits into independent halves, so
  // assemble a pair from one-sided vectors.
  std::vector<double> best_left, best_right;
  for (const auto& vec : cluster) {
    auto [nl, nr] = split(vec, l, r);
    if (best_left.empty() && nl > 1e-8) {
      best_left = l;
      for (double& x : best_left) x /= nl;
    }
    if (best_right.empty() && nr > 1e-8) {
      best_right = r;
      for (double& x : best_right) x /= nr;
    }
  }
  if (best_left.empty() || best_right.empty())
    throw std::runtime_error("second_singular_pair: degenerate cluster");
  out.left = std::move(best_left);
  out.right = std::move(best_right);
  return out;
}

std::vector<double> stationary_distribution(const Digraph& g) {
  const int n = g.size();
  if (n <= 64) {
    std::vector<Rat> pi = stationary_distribution_exact(g);
    std::vector<double> out(n);
    for (int v = 0; v < n; ++v) out[v] = pi[v].to_double();
    return out;
  }
  for (int v = 0; v < n; ++v)
    if (g.out_degree(v).is_zero())
      throw std::invalid_argument("stationary_distribution: zero out-degree");
  if (!g.strongly_connected())
    throw std::invalid_argument("stationary_distribution: not strongly connected");

  if (n <= 512) {
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
      if (m[col][col] == 0.0)
        throw std::runtime_error("stationary_distribution: singular system");
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        double f = m[r][col] / m[col][col];
        if (f == 0.0) continue;
        for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
      }
    }
    std::vector<double> pi(n);
    for (int v = 0; v < n; ++v) pi[v] = m[v][n] / m[v][v];
    return pi;
  }

  // Damped power iteration; the lazy step kills periodicity.
  std::vector<double> pi(n, 1.0 / n), next(n);
  for (int it = 0; it < 200000; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int u = 0; u < n; ++u) {
      double du = g.out_degree(u).to_double();
      for (const auto& [v, w] : g.out_neighbors(u)) next[v] += pi[u] * w.to_double() / du;
    }
    double res = 0.0, sum = 0.0;
    for (int v = 0; v < n; ++v) {
      next[v] = 0.5 * pi[v] + 0.5 * next[v];
      sum += next[v];
    }
    for (int v = 0; v < n; ++v) next[v] /= sum;
    for (int v = 0; v < n; ++v) res = std::max(res, std::abs(next[v] - pi[v]));
    pi.swap(next);
    if (res <= 1e-12) return pi;
  }
  throw std::runtime_error("stationary_distribution: power iteration did not converge");
}

}  // namespace svx
