#pragma once

#include <optional>
#include <vector>

#include "svx/digraph.hpp"

namespace svx {

/// Row-major square matrix of doubles.
struct DenseMatrix {
  int n = 0;
  std::vector<double> a;

  explicit DenseMatrix(int size) : n(size), a(static_cast<size_t>(size) * size, 0.0) {}
  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  /// |M(i,j) - M(j,i)| <= tol * max(1, |M(i,j)|) for all i, j.
  bool symmetric(double tol = 1e-12) const;
  double frobenius() const;
};

/// Full symmetric eigendecomposition. values sorted descending, vectors[k]
/// is the unit eigenvector for values[k] with its largest-magnitude
/// coordinate positive; residual is max_k |A v_k - lambda_k v_k|_inf.
struct EigenSystem {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
  double residual = 0.0;
};

/// Cyclic Jacobi with threshold sweeps. Converges when the off-diagonal
/// Frobenius mass drops below 1e-10 relative to the input norm; throws
/// after 64 sweeps without convergence or on asymmetric input.
EigenSystem symmetric_eigen(const DenseMatrix& m, bool want_vectors = true);

/// Singular values (always) and, for undirected graphs, eigenvalues of the
/// normalized adjacency matrix, both sorted descending.
struct Spectrum {
  std::vector<double> sigmas;
  std::optional<std::vector<double>> mus;
  double residual = 0.0;
};

struct SingularPair {
  double sigma2 = 0.0;
  std::vector<double> left, right;
};

/// A(u,v) = w(u,v) / sqrt(d(u) d(v)). Requires an Eulerian graph with all
/// degrees positive (d taken as the out-degree).
DenseMatrix normalized_adjacency(const Digraph& g);

/// Singular values computed through the symmetric lift: the 2n lift
/// eigenvalues come in +/- pairs and the nonnegative half is sigma_1..n.
/// Verifies the sign symmetry to 1e-8 and, for undirected inputs, the
/// identity sigma_2 = max(mu_2, |mu_n|).
Spectrum singular_values(const Digraph& g);

/// sigma_2 with unit left/right singular vectors, recovered from a lift
/// eigenvector for the second eigenvalue (halves renormalized). Both
/// vectors are orthogonal to d^{1/2}.
SingularPair second_singular_pair(const Digraph& g);

/// Floating-point stationary distribution: exact solve for n <= 64, dense
/// LU up to 512, then damped power iteration to residual 1e-12.
std::vector<double> stationary_distribution(const Digraph& g);

}  // namespace svx
