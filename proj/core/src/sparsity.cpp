#include <amc/linalg.hpp>
#include <amc/sparsity.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace amc {

SubspaceBasis::SubspaceBasis(Index ambient_dim) : vectors_(ambient_dim, 0) {
	if (ambient_dim < 1)
		throw InvalidArgument("ambient dimension must be positive");
}

SubspaceBasis::SubspaceBasis(Matrix orthonormal_columns) : vectors_(std::move(orthonormal_columns)) {
	if (vectors_.rows() < 1)
		throw InvalidArgument("ambient dimension must be positive");
	if (vectors_.cols() > vectors_.rows())
		throw InvalidArgument("subspace dimension exceeds ambient dimension");
	const Matrix gram = vectors_.transpose() * vectors_;
	const Matrix eye = Matrix::Identity(dim(), dim());
	if (dim() > 0 && (gram - eye).cwiseAbs().maxCoeff() > 1e-10)
		throw InvalidArgument("basis vectors are not orthonormal");
}

SubspaceBasis SubspaceBasis::span_of(const Matrix& A, double rel_tol) {
	return SubspaceBasis(linalg::range_basis(A, rel_tol));
}

bool SubspaceBasis::extend(const Vector& v, double abs_tol) {
	if (v.size() != ambient_dim())
		throw InvalidArgument("vector length does not match ambient dimension");
	const Index before = dim();
	linalg::append_orthonormal(vectors_, v, abs_tol);
	return dim() > before;
}

Vector SubspaceBasis::project(const Vector& x) const {
	if (empty())
		return Vector::Zero(ambient_dim());
	return vectors_ * (vectors_.transpose() * x);
}

double coherence(const SubspaceBasis& basis) {
	if (basis.empty())
		throw InvalidArgument("coherence of an empty basis is undefined");
	// ||P_U e_j||^2 is the squared norm of row j of an orthonormal basis.
	const double max_leverage = basis.vectors().rowwise().squaredNorm().maxCoeff();
	return static_cast<double>(basis.ambient_dim()) / static_cast<double>(basis.dim()) * max_leverage;
}

Index nonsparsity_vector(const Vector& x, double tol) {
	if (x.size() == 0)
		throw InvalidArgument("nonsparsity of an empty vector");
	const double scale = x.cwiseAbs().maxCoeff();
	if (scale == 0.0)
		return 0;
	Index count = 0;
	for (Index i = 0; i < x.size(); ++i)
		count += std::abs(x(i)) > tol * scale ? 1 : 0;
	return count;
}

namespace {

// Rows of U outside `support` (a sorted index list) have rank < dim.
bool support_admits_vector(const Matrix& U, const std::vector<Index>& support, double tol) {
	const Index m = U.rows();
	const Index k = U.cols();
	const Index outside = m - static_cast<Index>(support.size());
	if (outside < k)
		return true;
	Matrix rest(outside, k);
	Index row = 0;
	std::size_t s = 0;
	for (Index i = 0; i < m; ++i) {
		if (s < support.size() && support[s] == i) {
			++s;
			continue;
		}
		rest.row(row++) = U.row(i);
	}
	// U has orthonormal columns, so singular values of `rest` lie in [0, 1]
	// and an absolute threshold is meaningful.
	Eigen::JacobiSVD<Matrix> svd(rest);
	return svd.singularValues()(k - 1) <= tol;
}

// Advance `combo` (sorted, values in [0, n)) to the next lexicographic
// combination of the same size. Returns false after the last one.
bool next_combination(std::vector<Index>& combo, Index n) {
	const auto size = static_cast<Index>(combo.size());
	for (Index pos = size - 1; pos >= 0; --pos) {
		auto p = static_cast<std::size_t>(pos);
		if (combo[p] < n - size + pos) {
			++combo[p];
			for (std::size_t q = p + 1; q < combo.size(); ++q)
				combo[q] = combo[q - 1] + 1;
			return true;
		}
	}
	return false;
}

} // namespace

Index nonsparsity_subspace(const SubspaceBasis& basis, const EnumerationOptions& options) {
	if (basis.empty())
		throw InvalidArgument("nonsparsity of the zero subspace is undefined");
	const Index m = basis.ambient_dim();
	if (m > options.cap)
		throw InvalidArgument("ambient dimension " + std::to_string(m) + " exceeds the enumeration cap " + std::to_string(options.cap) +
		                      "; exact sparsest-vector search refused");
	const Matrix& U = basis.vectors();
	const Index last = m - basis.dim() + 1;
	for (Index size = 1; size < last; ++size) {
		std::vector<Index> support(static_cast<std::size_t>(size));
		std::iota(support.begin(), support.end(), Index{0});
		do {
			if (support_admits_vector(U, support, options.tol))
				return size;
		} while (next_combination(support, m));
	}
	return last;
}

Index nonsparsity_matrix(const Matrix& M, const EnumerationOptions& options) {
	if (M.size() == 0 || M.cwiseAbs().maxCoeff() == 0.0)
		throw InvalidArgument("nonsparsity of a zero matrix is undefined");
	return nonsparsity_subspace(SubspaceBasis::column_space(M), options);
}

Index sparsity_vector(const Vector& x, double tol) {
	return x.size() - nonsparsity_vector(x, tol);
}

Index sparsity_subspace(const SubspaceBasis& basis, const EnumerationOptions& options) {
	return basis.ambient_dim() - nonsparsity_subspace(basis, options);
}

Index sparsity_matrix(const Matrix& M, const EnumerationOptions& options) {
	return M.rows() - nonsparsity_matrix(M, options);
}

Index psi_from_coherence(double mu0, Index r, Index m) {
	if (!(mu0 > 0.0) || r < 1 || m < 1)
		throw InvalidArgument("psi_from_coherence needs mu0 > 0, r >= 1, m >= 1");
	if (mu0 < 1.0)
		throw InvalidArgument("coherence is at least 1");
	// Small slack so that exact ratios such as mu0 = m / r land on 1, not 0.
	const double ratio = static_cast<double>(m) / (mu0 * static_cast<double>(r));
	const auto psi = static_cast<Index>(std::floor(ratio + 1e-9));
	return std::max<Index>(psi, 1);
}

} // namespace amc
