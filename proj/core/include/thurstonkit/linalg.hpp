#pragma once

#include <optional>
#include <vector>

#include "thurstonkit/rational.hpp"

namespace thurstonkit {

struct RowEchelon {
  RatMat reduced;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row of `reduced`

  std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan elimination over Q.
RowEchelon row_reduce(const RatMat& a);

std::size_t rank(const RatMat& a);

// One exact solution of a.x = b, free variables set to zero; nullopt when the
// system is inconsistent. Throws ContractViolation on a row-count mismatch.
std::optional<RatVec> solve_linear_system(const RatMat& a, const RatVec& b);

// Basis of {x : a.x = 0}, one vector per free column with that column set to
// 1. The basis depends only on the row space of `a`, so two matrices with the
// same row space produce identical bases.
std::vector<RatVec> kernel_basis(const RatMat& a);

// Nonzero rows of the reduced row echelon form: a canonical basis of the row
// space.
std::vector<RatVec> row_space_basis(const RatMat& a);

// Orthogonal projection of x onto the complement of span(basis). `basis` must
// be linearly independent.
RatVec project_out(const RatVec& x, const std::vector<RatVec>& basis);

}  // namespace thurstonkit
