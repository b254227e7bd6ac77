#pragma once

// Exact characteristic-polynomial root oracle for symmetric 3x3 matrices
// with rational entries: coefficients are computed in rational arithmetic,
// multiple roots are split off through gcd(p, p'), and the remaining
// simple roots are isolated with a Sturm chain and bisected to width
// 1e-13. Fully independent of the iterative eigensolver it checks.

#include <array>
#include <vector>

#include "svx/rational.hpp"
#include "svx/spectra.hpp"

namespace svx::testing {

using Poly = std::vector<Rat>;  // coefficients, low degree first

inline int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

inline Rat eval(const Poly& p, const Rat& x) {
  Rat acc;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
  return acc;
}

inline Poly derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * p[i]);
  if (d.empty()) d.push_back(Rat(0));
  return d;
}

inline Poly remainder(Poly a, const Poly& b) {
  int db = degree(b);
  for (int da = degree(a); da >= db && da >= 0; da = degree(a)) {
    Rat f = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
    a[da] = Rat(0);  // force exact cancellation of the lead
    a.resize(da);
    if (a.empty()) a.push_back(Rat(0));
  }
  return a;
}

inline Poly poly_gcd(Poly a, Poly b) {
  while (degree(b) >= 0) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
    if (degree(b) < 0) break;
  }
  Rat lead = a[degree(a)];
  for (Rat& c : a) c /= lead;
  return a;
}

inline std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, derivative(p)};
  while (degree(chain.back()) > 0) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    if (degree(r) < 0) break;
    for (Rat& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
  int vars = 0, prev = 0;
  for (const Poly& p : chain) {
    int s = eval(p, x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

/// Distinct real roots of a square-free polynomial within (lo, hi], each
/// bisected to width <= 1e-13.
inline std::vector<Rat> squarefree_roots(const Poly& p, Rat lo, Rat hi) {
  std::vector<Poly> chain = sturm_chain(p);
  std::vector<Rat> roots;
  struct Interval {
    Rat a, b;
    int count;
  };
  std::vector<Interval> work{{lo, hi, sign_variations(chain, lo) - sign_variations(chain, hi)}};
  const Rat width_target(1, 10000000000000L);  // 1e-13
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    if (iv.count <= 0) continue;
    if (iv.count == 1) {
      // One root in (a, b]. Sign bisection when both endpoint signs are
      // usable; variation-count bisection otherwise (a may itself be a
      // root of p after an earlier split landed on one).
      Rat a = iv.a, b = iv.b;
      Rat fa = eval(p, a), fb = eval(p, b);
      if (fa.sign() != 0 && fb.sign() != 0 && fa.sign() != fb.sign()) {
        while (b - a > width_target) {
          Rat mid = (a + b) / Rat(2);
          Rat fm = eval(p, mid);
          if (fm.is_zero()) {
            a = b = mid;
            break;
          }
          if (fa.sign() * fm.sign() < 0)
            b = mid;
          else {
            a = mid;
            fa = fm;
          }
        }
      } else {
        int va = sign_variations(chain, a);
        while (b - a > width_target) {
          Rat mid = (a + b) / Rat(2);
          if (eval(p, mid).is_zero()) {
            a = b = mid;
            break;
          }
          int vm = sign_variations(chain, mid);
          if (va - vm == 1) {
            b = mid;
          } else {
            a = mid;
            va = vm;
          }
        }
      }
      roots.push_back((a + b) / Rat(2));
      continue;
    }
    Rat mid = (iv.a + iv.b) / Rat(2);
    int vm = sign_variations(chain, mid);
    int va = sign_variations(chain, iv.a), vb = sign_variations(chain, iv.b);
    work.push_back({iv.a, mid, va - vm});
    work.push_back({mid, iv.b, vm - vb});
  }
  return roots;
}

/// The three eigenvalues (with multiplicity) of a symmetric 3x3 rational
/// matrix, sorted descending, accurate to well below 1e-12.
inline std::array<double, 3> char_poly_eigenvalues_3x3(const std::array<std::array<Rat, 3>, 3>& m) {
  Rat tr = m[0][0] + m[1][1] + m[2][2];
  Rat s2 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
           m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
  Rat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
            m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
            m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  // det(M - xI) = -x^3 + tr x^2 - s2 x + det.
  Poly p{det, -s2, tr, Rat(-1)};

  std::vector<Rat> roots;
  Poly g = poly_gcd(p, derivative(p));
  int dg = degree(g);
  if (dg == 2) {
    Rat r = tr / Rat(3);  // triple root
    roots = {r, r, r};
  } else if (dg == 1) {
    Rat r = -g[0] / g[1];  // double root, exactly rational
    roots = {r, r, tr - Rat(2) * r};
  } else {
    roots = squarefree_roots(p, Rat(-4), Rat(4));
  }
  if (roots.size() != 3)
    throw std::logic_error("cubic oracle: expected three roots with multiplicity");

  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = roots[i].to_double();
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace svx::testing
