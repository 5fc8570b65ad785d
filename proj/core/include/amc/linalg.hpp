#pragma once

#include <amc/types.hpp>

#include <span>

namespace amc::linalg {

/// Numeric rank: number of singular values above rel_tol * sigma_max.
/// A matrix with sigma_max == 0 (or no entries) has rank 0.
Index numeric_rank(const Matrix& A, double rel_tol = 1e-9);

/// Orthonormal basis (m x rank) of range(A), from the thin SVD.
Matrix range_basis(const Matrix& A, double rel_tol = 1e-9);

/// Rows `rows` of A, in the given order.
Matrix select_rows(const Matrix& A, std::span<const Index> rows);
Vector select_rows(const Vector& v, std::span<const Index> rows);

/// Minimum-norm least-squares solution of A x = b (pseudoinverse applied to b).
Vector pinv_solve(const Matrix& A, const Vector& b);

/**
 * Append `v` to the orthonormal columns of Q after two passes of classical
 * Gram-Schmidt. Returns the norm of the residual before normalization; when
 * it is not above `abs_tol` Q is left unchanged.
 */
double append_orthonormal(Matrix& Q, const Vector& v, double abs_tol);

/// Ratio sigma_min / sigma_max; 0 for an empty or zero matrix.
double inverse_condition(const Matrix& A);

} // namespace amc::linalg
