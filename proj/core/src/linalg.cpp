#include "thurstonkit/linalg.hpp"

#include "thurstonkit/errors.hpp"

namespace thurstonkit {

RowEchelon row_reduce(const RatMat& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::vector<mpq_class>> w(m, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = a(i, j).value();

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t p = r;
    while (p < m && sgn(w[p][col]) == 0) ++p;
    if (p == m) continue;
    std::swap(w[p], w[r]);
    const mpq_class inv = 1 / w[r][col];
    for (std::size_t j = col; j < n; ++j) w[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(w[i][col]) == 0) continue;
      const mpq_class f = w[i][col];
      for (std::size_t j = col; j < n; ++j) w[i][j] -= f * w[r][j];
    }
    pivots.push_back(col);
    ++r;
  }

  RatMat reduced(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) reduced(i, j) = Rat(std::move(w[i][j]));
  return RowEchelon{std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RatMat& a) { return row_reduce(a).rank(); }

std::optional<RatVec> solve_linear_system(const RatMat& a, const RatVec& b) {
  if (a.rows() != b.dim()) {
    throw ContractViolation("solve_linear_system: matrix has " + std::to_string(a.rows()) +
                            " rows but right-hand side has " + std::to_string(b.dim()) +
                            " entries");
  }
  const std::size_t n = a.cols();
  RatMat aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const RowEchelon e = row_reduce(aug);
  RatVec x(n);
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (e.pivots[i] == n) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, n);
  }
  return x;
}

std::vector<RatVec> kernel_basis(const RatMat& a) {
  const std::size_t n = a.cols();
  const RowEchelon e = row_reduce(a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(n);
    v[free] = Rat(1);
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVec> row_space_basis(const RatMat& a) { return row_reduce(a).reduced.row_vectors(); }

RatVec project_out(const RatVec& x, const std::vector<RatVec>& basis) {
  if (basis.empty()) return x;
  // Solve the Gram system G.t = B.x, then x - B^T t.
  const std::size_t k = basis.size();
  RatMat gram(k, k);
  RatVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(basis[i], x);
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
  }
  const auto t = solve_linear_system(gram, rhs);
  if (!t) throw ContractViolation("project_out: basis is not linearly independent");
  RatVec out = x;
  for (std::size_t i = 0; i < k; ++i) out -= (*t)[i] * basis[i];
  return out;
}

}  // namespace thurstonkit
