#include <amc/linalg.hpp>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace amc::linalg {

Index numeric_rank(const Matrix& A, double rel_tol) {
	if (A.size() == 0)
		return 0;
	Eigen::JacobiSVD<Matrix> svd(A);
	const Vector& s = svd.singularValues();
	if (s.size() == 0 || s(0) == 0.0)
		return 0;
	Index rank = 0;
	for (Index k = 0; k < s.size(); ++k)
		rank += s(k) > rel_tol * s(0) ? 1 : 0;
	return rank;
}

Matrix range_basis(const Matrix& A, double rel_tol) {
	if (A.size() == 0)
		return Matrix(A.rows(), 0);
	Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU);
	const Vector& s = svd.singularValues();
	Index rank = 0;
	if (s.size() > 0 && s(0) > 0.0)
		while (rank < s.size() && s(rank) > rel_tol * s(0))
			++rank;
	return svd.matrixU().leftCols(rank);
}

Matrix select_rows(const Matrix& A, std::span<const Index> rows) {
	Matrix out(static_cast<Index>(rows.size()), A.cols());
	for (std::size_t k = 0; k < rows.size(); ++k)
		out.row(static_cast<Index>(k)) = A.row(rows[k]);
	return out;
}

Vector select_rows(const Vector& v, std::span<const Index> rows) {
	Vector out(static_cast<Index>(rows.size()));
	for (std::size_t k = 0; k < rows.size(); ++k)
		out(static_cast<Index>(k)) = v(rows[k]);
	return out;
}

Vector pinv_solve(const Matrix& A, const Vector& b) {
	if (A.cols() == 0)
		return Vector(0);
	Eigen::CompleteOrthogonalDecomposition<Matrix> cod(A);
	return cod.solve(b);
}

double append_orthonormal(Matrix& Q, const Vector& v, double abs_tol) {
	Vector w = v;
	for (int pass = 0; pass < 2 && Q.cols() > 0; ++pass)
		w -= Q * (Q.transpose() * w);
	const double norm = w.norm();
	if (norm <= abs_tol)
		return norm;
	Q.conservativeResize(Eigen::NoChange, Q.cols() + 1);
	Q.col(Q.cols() - 1) = w / norm;
	return norm;
}

double inverse_condition(const Matrix& A) {
	if (A.size() == 0)
		return 0.0;
	Eigen::JacobiSVD<Matrix> svd(A);
	const Vector& s = svd.singularValues();
	if (s(0) == 0.0)
		return 0.0;
	return s(s.size() - 1) / s(0);
}

} // namespace amc::linalg
