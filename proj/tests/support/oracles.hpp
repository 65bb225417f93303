#pragma once

// Independent brute-force oracles. Nothing here calls the library's linear
// algebra or polytope code; everything is recomputed from determinants and
// a private Gaussian elimination.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "thurstonkit/polytope.hpp"
#include "thurstonkit/rational.hpp"

namespace oracle {

using thurstonkit::Rat;
using thurstonkit::RatVec;

using Matrix = std::vector<std::vector<Rat>>;

inline Rat det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rat(1);
  if (n == 1) return m[0][0];
  Rat total(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rat> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    const Rat term = m[0][j] * det(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Solves the square system rows * x = rhs by Cramer's rule.
inline std::optional<RatVec> cramer(const std::vector<RatVec>& rows, const std::vector<Rat>& rhs) {
  const std::size_t n = rows.size();
  Matrix m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];
  const Rat d = det(m);
  if (d.is_zero()) return std::nullopt;
  RatVec x(n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix mj = m;
    for (std::size_t i = 0; i < n; ++i) mj[i][j] = rhs[i];
    x[j] = det(mj) / d;
  }
  return x;
}

inline bool feasible(const thurstonkit::HRep& h, const RatVec& p) {
  for (const auto& hs : h.halfspaces) {
    if (thurstonkit::dot(hs.normal, p) > hs.rhs) return false;
  }
  return true;
}

inline bool full_column_rank(const std::vector<RatVec>& rows, std::size_t dim) {
  bool found = false;
  subsets(rows.size(), dim, [&](const std::vector<std::size_t>& s) {
    if (found) return;
    Matrix m;
    for (auto i : s) m.push_back(rows[i].coords());
    found = !det(m).is_zero();
  });
  return found;
}

// Vertices of {x : A x <= b} by solving every dim-subset of constraints with
// equality and keeping the feasible solutions.
inline std::set<RatVec> brute_vertices(const thurstonkit::HRep& h) {
  std::set<RatVec> out;
  subsets(h.halfspaces.size(), h.dim, [&](const std::vector<std::size_t>& s) {
    std::vector<RatVec> rows;
    std::vector<Rat> rhs;
    for (auto i : s) {
      rows.push_back(h.halfspaces[i].normal);
      rhs.push_back(h.halfspaces[i].rhs);
    }
    if (auto x = cramer(rows, rhs); x && feasible(h, *x)) out.insert(*x);
  });
  return out;
}

// Generalised cross product of dim - 1 vectors in dim <= 3 (cofactor expansion).
inline RatVec cofactor_normal(const std::vector<RatVec>& rows, std::size_t dim) {
  RatVec n(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Matrix m;
    for (const auto& r : rows) {
      std::vector<Rat> row;
      for (std::size_t k = 0; k < dim; ++k) {
        if (k != j) row.push_back(r[k]);
      }
      m.push_back(row);
    }
    n[j] = (j % 2 == 0) ? det(m) : -det(m);
  }
  return n;
}

// Extreme rays of the pointed cone {x : A x <= 0}, primitive integer.
inline std::set<RatVec> brute_rays(const thurstonkit::HRep& h) {
  std::set<RatVec> out;
  if (h.dim == 1) {
    for (int s : {1, -1}) {
      RatVec r{Rat(s)};
      bool ok = true;
      for (const auto& hs : h.halfspaces) ok = ok && thurstonkit::dot(hs.normal, r) <= Rat(0);
      if (ok) out.insert(r);
    }
    return out;
  }
  subsets(h.halfspaces.size(), h.dim - 1, [&](const std::vector<std::size_t>& s) {
    std::vector<RatVec> rows;
    for (auto i : s) rows.push_back(h.halfspaces[i].normal);
    const RatVec n = cofactor_normal(rows, h.dim);
    if (n.is_zero()) return;
    for (const RatVec& r : {n, -n}) {
      bool ok = true;
      for (const auto& hs : h.halfspaces) ok = ok && thurstonkit::dot(hs.normal, r) <= Rat(0);
      if (ok) out.insert(thurstonkit::primitive_integer(r));
    }
  });
  return out;
}

// Exact solve of an arbitrary system; first solution with free variables 0.
inline std::optional<RatVec> gauss_solve(Matrix a, std::vector<Rat> b, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rat inv = Rat(1) / a[r][c];
    for (auto& v : a[r]) v = v * inv;
    b[r] = b[r] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rat f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = a[i][k] - f * a[r][k];
      b[i] = b[i] - f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  RatVec x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return x;
}

// Caratheodory: p lies in conv(pts) iff it is a convex combination of at most
// dim + 1 of them. Each candidate subset is solved for affine weights.
inline bool in_hull(const std::vector<RatVec>& pts, const RatVec& p) {
  const std::size_t dim = p.dim();
  bool found = false;
  for (std::size_t k = 1; k <= std::min(dim + 1, pts.size()) && !found; ++k) {
    subsets(pts.size(), k, [&](const std::vector<std::size_t>& s) {
      if (found) return;
      Matrix a(dim + 1, std::vector<Rat>(k));
      std::vector<Rat> b(dim + 1);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = pts[s[j]][i];
        b[i] = p[i];
      }
      for (std::size_t j = 0; j < k; ++j) a[dim][j] = Rat(1);
      b[dim] = Rat(1);
      const auto w = gauss_solve(a, b, k);
      if (!w) return;
      // Affinely dependent subsets are covered by smaller ones.
      bool nonneg = true;
      for (const auto& c : *w) nonneg = nonneg && c.sign() >= 0;
      found = nonneg;
    });
  }
  return found;
}

// Points of pts not in the hull of the others.
inline std::set<RatVec> extreme_points(const std::vector<RatVec>& pts) {
  std::set<RatVec> uniq(pts.begin(), pts.end());
  std::vector<RatVec> all(uniq.begin(), uniq.end());
  std::set<RatVec> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<RatVec> others;
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (j != i) others.push_back(all[j]);
    }
    if (others.empty() || !in_hull(others, all[i])) out.insert(all[i]);
  }
  return out;
}

// Facets {n : n.x <= 1} of a full-dimensional polytope containing the origin in
// its interior: hyperplanes through dim vertices supporting all others.
inline std::set<RatVec> brute_facet_normals(const std::vector<RatVec>& verts, std::size_t dim) {
  std::set<RatVec> out;
  subsets(verts.size(), dim, [&](const std::vector<std::size_t>& s) {
    std::vector<RatVec> rows;
    for (auto i : s) rows.push_back(verts[i]);
    const auto n = cramer(rows, std::vector<Rat>(dim, Rat(1)));
    if (!n) return;
    for (const auto& v : verts) {
      if (thurstonkit::dot(*n, v) > Rat(1)) return;
    }
    out.insert(*n);
  });
  return out;
}

inline Rat brute_norm(const std::vector<RatVec>& duals, const RatVec& alpha) {
  Rat best(0);
  for (const auto& d : duals) best = std::max(best, thurstonkit::dot(d, alpha));
  return best;
}

inline RatVec random_int_vec(std::mt19937_64& rng, std::size_t dim, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatVec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = Rat(d(rng));
  return v;
}

}  // namespace oracle
