#pragma once

#include <amc/types.hpp>

namespace amc {

/// Orthonormal basis of a subspace of R^ambient_dim, stored as the columns of
/// an ambient_dim x dim matrix. The constructor checks orthonormality to 1e-10.
class SubspaceBasis {
public:
	/// Empty (zero-dimensional) subspace of R^ambient_dim.
	explicit SubspaceBasis(Index ambient_dim);
	/// Takes columns that are already orthonormal.
	explicit SubspaceBasis(Matrix orthonormal_columns);

	/// Orthonormalizes span(A); columns below rel_tol * sigma_max are dropped.
	static SubspaceBasis span_of(const Matrix& A, double rel_tol = 1e-9);
	static SubspaceBasis column_space(const Matrix& M, double rel_tol = 1e-9) { return span_of(M, rel_tol); }
	static SubspaceBasis row_space(const Matrix& M, double rel_tol = 1e-9) { return span_of(M.transpose(), rel_tol); }

	Index ambient_dim() const { return vectors_.rows(); }
	Index dim() const { return vectors_.cols(); }
	bool empty() const { return dim() == 0; }
	const Matrix& vectors() const { return vectors_; }

	/// Add the component of v orthogonal to the current span. Returns false
	/// (basis unchanged) when that component has norm <= abs_tol.
	bool extend(const Vector& v, double abs_tol);

	/// Orthogonal projector applied to x.
	Vector project(const Vector& x) const;

private:
	Matrix vectors_;
};

/// Default enumeration cap for the exact sparsest-vector search.
inline constexpr Index kDefaultEnumerationCap = 20;
inline constexpr double kDefaultZeroTol = 1e-9;

/// (ambient_dim / dim) * max_j ||P_U e_j||^2. Throws on an empty basis.
double coherence(const SubspaceBasis& basis);

/// Number of coordinates with |x_i| > tol * ||x||_inf; 0 for the zero vector.
Index nonsparsity_vector(const Vector& x, double tol = kDefaultZeroTol);

struct EnumerationOptions {
	double tol = kDefaultZeroTol;
	Index cap = kDefaultEnumerationCap;
};

/**
 * Minimum support size of a nonzero vector in the subspace.
 *
 * Candidate supports T are enumerated by increasing size, lexicographically
 * within a size. span(U) contains a nonzero x with supp(x) in T exactly when
 * the rows of U outside T have rank < dim; the first T that passes gives the
 * answer. Sizes stop at ambient_dim - dim + 1, which always passes.
 *
 * Refuses (InvalidArgument) when ambient_dim exceeds options.cap.
 */
Index nonsparsity_subspace(const SubspaceBasis& basis, const EnumerationOptions& options = {});

/// nonsparsity_subspace of the column space of M. Throws on a zero matrix.
Index nonsparsity_matrix(const Matrix& M, const EnumerationOptions& options = {});

/// Complements: ambient dimension minus the corresponding nonsparsity.
Index sparsity_vector(const Vector& x, double tol = kDefaultZeroTol);
Index sparsity_subspace(const SubspaceBasis& basis, const EnumerationOptions& options = {});
Index sparsity_matrix(const Matrix& M, const EnumerationOptions& options = {});

/// Conservative psi(U) implied by column-space coherence: floor(m / (mu0 r)),
/// at least 1. Pair it with psi(V) = 1 when nothing is known about rows.
Index psi_from_coherence(double mu0, Index r, Index m);

} // namespace amc
