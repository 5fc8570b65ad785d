#include "brute_force_oracle.hpp"

#include <amc/generator.hpp>
#include <amc/random.hpp>
#include <amc/sparsity.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace amc;

namespace {

SubspaceBasis span_of_vector(std::initializer_list<double> values) {
	Vector v(static_cast<Index>(values.size()));
	Index i = 0;
	for (double x : values)
		v(i++) = x;
	return SubspaceBasis::span_of(v);
}

Matrix gaussian(Index rows, Index cols, std::uint64_t seed) {
	Rng rng(seed);
	std::normal_distribution<double> normal;
	Matrix A(rows, cols);
	for (Index j = 0; j < cols; ++j)
		for (Index i = 0; i < rows; ++i)
			A(i, j) = normal(rng);
	return A;
}

} // namespace

TEST(SubspaceBasis, RejectsNonOrthonormalColumns) {
	Matrix A(3, 2);
	A << 1, 1, 0, 1, 0, 0;
	EXPECT_THROW(SubspaceBasis{A}, InvalidArgument);
	EXPECT_EQ(SubspaceBasis::span_of(A).dim(), 2);
	EXPECT_THROW(SubspaceBasis{Matrix::Identity(2, 3)}, InvalidArgument);
}

TEST(Coherence, StandardBasisVectorIsMaximal) {
	const Index m = 7;
	SubspaceBasis e1{Matrix(Matrix::Identity(m, 1))};
	EXPECT_DOUBLE_EQ(coherence(e1), static_cast<double>(m));
}

TEST(Coherence, AllOnesIsIncoherent) {
	EXPECT_NEAR(coherence(span_of_vector({1, 1, 1, 1})), 1.0, 1e-12);
}

TEST(Coherence, WorkedExampleColumnSpace) {
	const auto basis = SubspaceBasis::column_space(paper_example());
	EXPECT_NEAR(coherence(basis), 4.8, 1e-12);
	EXPECT_NEAR(coherence(basis), oracle_check::projector_coherence(paper_example().col(0)), 1e-12);
}

TEST(Coherence, MatchesProjectorOracle) {
	for (std::uint64_t seed = 0; seed < 10; ++seed) {
		const Matrix A = gaussian(12, 3, seed);
		EXPECT_NEAR(coherence(SubspaceBasis::span_of(A)), oracle_check::projector_coherence(A), 1e-9);
	}
}

TEST(Coherence, EmptyBasisThrows) {
	EXPECT_THROW(coherence(SubspaceBasis(5)), InvalidArgument);
}

TEST(NonsparsityVector, Basics) {
	Vector x(6);
	x << 0, 0, 1, 0, 0, 2;
	EXPECT_EQ(nonsparsity_vector(x), 2);
	EXPECT_EQ(nonsparsity_vector(Vector::Zero(5)), 0);
	EXPECT_EQ(nonsparsity_vector(gaussian(7, 1, 3).col(0)), 7);
	EXPECT_THROW(nonsparsity_vector(Vector(0)), InvalidArgument);
}

TEST(NonsparsityVector, RelativeTolerance) {
	Vector x(3);
	x << 1.0, 1e-12, -3.0;
	EXPECT_EQ(nonsparsity_vector(x), 2);
	EXPECT_EQ(nonsparsity_vector(1e-20 * x), 2);
	EXPECT_EQ(nonsparsity_vector(x, 1e-14), 3);
}

TEST(NonsparsitySubspace, WorkedExample) {
	EXPECT_EQ(nonsparsity_subspace(SubspaceBasis::column_space(paper_example())), 2);
}

TEST(NonsparsitySubspace, CoordinateAxis) {
	SubspaceBasis e2{Matrix(Matrix::Identity(5, 5).col(1))};
	EXPECT_EQ(nonsparsity_subspace(e2), 1);
}

TEST(NonsparsitySubspace, GenericIsAmbientMinusDimPlusOne) {
	for (std::uint64_t seed = 0; seed < 5; ++seed) {
		const Matrix A = gaussian(8, 3, seed);
		const Index psi = nonsparsity_subspace(SubspaceBasis::span_of(A));
		EXPECT_EQ(psi, 6);
		EXPECT_EQ(psi, oracle_check::brute_force_psi(A));
	}
}

TEST(NonsparsitySubspace, AgreesWithBitmaskOracleOnStructuredSubspaces) {
	Rng rng(2024);
	std::uniform_int_distribution<int> dim_pick(1, 4);
	for (int trial = 0; trial < 40; ++trial) {
		const Index m = 9;
		const Index k = dim_pick(rng);
		Matrix A = gaussian(m, k, 100 + trial);
		// Zero a random block of the first column so the subspace has a sparse direction.
		std::uniform_int_distribution<Index> zeros(0, m - 1);
		const Index count = zeros(rng);
		for (Index i = 0; i < count; ++i)
			A(i, 0) = 0.0;
		EXPECT_EQ(nonsparsity_subspace(SubspaceBasis::span_of(A)), oracle_check::brute_force_psi(A)) << "trial " << trial;
	}
}

TEST(NonsparsitySubspace, RefusesAboveCap) {
	const Matrix A = gaussian(21, 2, 1);
	EXPECT_THROW(nonsparsity_subspace(SubspaceBasis::span_of(A)), InvalidArgument);
	EnumerationOptions opts;
	opts.cap = 21;
	EXPECT_EQ(nonsparsity_subspace(SubspaceBasis::span_of(A), opts), 20);
	opts.cap = 5;
	EXPECT_THROW(nonsparsity_subspace(SubspaceBasis::span_of(gaussian(6, 1, 1)), opts), InvalidArgument);
}

TEST(NonsparsityMatrix, Basics) {
	EXPECT_EQ(nonsparsity_matrix(paper_example()), 2);
	EXPECT_EQ(nonsparsity_matrix(Matrix::Identity(3, 3)), 1);
	const Matrix outer = gaussian(5, 1, 9) * gaussian(4, 1, 10).transpose();
	EXPECT_EQ(nonsparsity_matrix(outer), 5);
	EXPECT_THROW(nonsparsity_matrix(Matrix::Zero(3, 3)), InvalidArgument);
}

TEST(Sparsity, Complements) {
	EXPECT_EQ(sparsity_subspace(SubspaceBasis::column_space(paper_example())), 4);
	EXPECT_EQ(sparsity_matrix(paper_example()), 4);
	const Index m = 9;
	EXPECT_EQ(sparsity_vector(Vector::Unit(m, 0)), m - 1);
	EXPECT_EQ(sparsity_vector(gaussian(m, 1, 4).col(0)), 0);
}

TEST(PsiFromCoherence, Examples) {
	EXPECT_EQ(psi_from_coherence(100.0 / 5.0, 5, 100), 1);
	EXPECT_EQ(psi_from_coherence(7.0 / 3.0, 3, 7), 1);
	EXPECT_EQ(psi_from_coherence(1.0, 1, 100), 100);
	EXPECT_EQ(psi_from_coherence(2.0, 5, 100), 10);
	EXPECT_THROW(psi_from_coherence(0.0, 1, 10), InvalidArgument);
	EXPECT_THROW(psi_from_coherence(0.5, 1, 10), InvalidArgument);
	EXPECT_THROW(psi_from_coherence(2.0, 0, 10), InvalidArgument);
}

// mu0 r > m / psi on constructed instances: the coherence-derived value
// never exceeds the true nonsparsity-number.
TEST(PsiFromCoherence, IsConservativeOnConstructedInstances) {
	for (std::uint64_t seed = 0; seed < 20; ++seed) {
		GenSpec spec;
		spec.m = 10;
		spec.n = 8;
		spec.r = 1 + static_cast<Index>(seed % 3);
		spec.psi_u_target = 1 + static_cast<Index>(seed % (spec.m - spec.r + 1));
		spec.seed = seed;
		const Matrix M = gen_with_sparsity(spec);
		const auto basis = SubspaceBasis::column_space(M);
		const double mu0 = coherence(basis);
		const Index psi = nonsparsity_subspace(basis);
		EXPECT_GT(mu0 * static_cast<double>(spec.r), static_cast<double>(spec.m) / static_cast<double>(psi) - 1e-9);
		EXPECT_LE(psi_from_coherence(mu0, spec.r, spec.m), psi);
	}
}
