#include <amc/generator.hpp>
#include <amc/random.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace amc {

namespace {

constexpr std::uint64_t kLeftStream = 1;
constexpr std::uint64_t kRightStream = 2;

Matrix gaussian(Index rows, Index cols, Rng& rng) {
	std::normal_distribution<double> normal(0.0, 1.0);
	Matrix out(rows, cols);
	for (Index j = 0; j < cols; ++j)
		for (Index i = 0; i < rows; ++i)
			out(i, j) = normal(rng);
	return out;
}

// Nonzeros are drawn from +-[0.5, 1.5] so no "nonzero" lands near zero.
Vector sparse_direction(Index dim, Index support, Rng& rng) {
	IndexList pool(static_cast<std::size_t>(dim));
	std::iota(pool.begin(), pool.end(), Index{0});
	const IndexList chosen = sample_without_replacement(pool, support, rng);
	std::uniform_real_distribution<double> magnitude(0.5, 1.5);
	std::bernoulli_distribution sign(0.5);
	Vector v = Vector::Zero(dim);
	for (Index i : chosen)
		v(i) = (sign(rng) ? 1.0 : -1.0) * magnitude(rng);
	return v;
}

void check_target(const std::optional<Index>& target, Index dim, Index r, const char* name) {
	if (!target)
		return;
	if (*target < 1)
		throw InvalidArgument(std::string(name) + " must be >= 1");
	if (*target > dim)
		throw InvalidArgument(std::string(name) + " = " + std::to_string(*target) + " exceeds ambient dimension " + std::to_string(dim));
	if (*target > dim - r + 1)
		throw InvalidArgument(std::string(name) + " = " + std::to_string(*target) + " is infeasible for rank " + std::to_string(r) +
		                      " (maximum " + std::to_string(dim - r + 1) + ")");
}

} // namespace

void GenSpec::validate() const {
	if (m < 1 || n < 1)
		throw InvalidArgument("matrix dimensions must be positive");
	if (r < 1 || r > std::min(m, n))
		throw InvalidArgument("rank must lie in [1, min(m, n)]");
	check_target(psi_u_target, m, r, "psi_u_target");
	check_target(psi_v_target, n, r, "psi_v_target");
}

Matrix gen_generic(const GenSpec& spec) {
	spec.validate();
	if (spec.psi_u_target || spec.psi_v_target)
		throw InvalidArgument("gen_generic takes no sparsity targets; use gen_with_sparsity");
	Rng left(derive_seed(spec.seed, kLeftStream));
	Rng right(derive_seed(spec.seed, kRightStream));
	const Matrix A = gaussian(spec.m, spec.r, left);
	const Matrix B = gaussian(spec.n, spec.r, right);
	return A * B.transpose();
}

Matrix gen_with_sparsity(const GenSpec& spec) {
	spec.validate();
	if (!spec.psi_u_target && !spec.psi_v_target)
		throw InvalidArgument("gen_with_sparsity needs psi_u_target and/or psi_v_target");
	Rng left(derive_seed(spec.seed, kLeftStream));
	Rng right(derive_seed(spec.seed, kRightStream));
	Matrix A = gaussian(spec.m, spec.r, left);
	Matrix B = gaussian(spec.n, spec.r, right);
	if (spec.psi_u_target)
		A.col(0) = sparse_direction(spec.m, *spec.psi_u_target, left);
	if (spec.psi_v_target)
		B.col(0) = sparse_direction(spec.n, *spec.psi_v_target, right);
	return A * B.transpose();
}

Matrix generate(const GenSpec& spec) {
	if (spec.psi_u_target || spec.psi_v_target)
		return gen_with_sparsity(spec);
	return gen_generic(spec);
}

Matrix paper_example() {
	Matrix M = Matrix::Zero(6, 4);
	M.row(2) << 1, 3, 2, 3;
	M.row(5) << 2, 6, 4, 6;
	return M;
}

IndexList sample_without_replacement(std::span<const Index> pool, Index count, Rng& rng) {
	const auto size = static_cast<Index>(pool.size());
	if (count < 0 || count > size)
		throw InvalidArgument("cannot draw " + std::to_string(count) + " of " + std::to_string(size) + " items without replacement");
	IndexList work(pool.begin(), pool.end());
	for (Index k = 0; k < count; ++k) {
		std::uniform_int_distribution<Index> pick(k, size - 1);
		std::swap(work[static_cast<std::size_t>(k)], work[static_cast<std::size_t>(pick(rng))]);
	}
	work.resize(static_cast<std::size_t>(count));
	std::sort(work.begin(), work.end());
	return work;
}

} // namespace amc
