#include <amc/generator.hpp>
#include <amc/linalg.hpp>
#include <amc/sparsity.hpp>

#include <gtest/gtest.h>

using namespace amc;

namespace {

GenSpec spec_of(Index m, Index n, Index r, std::uint64_t seed) {
	GenSpec s;
	s.m = m;
	s.n = n;
	s.r = r;
	s.seed = seed;
	return s;
}

} // namespace

TEST(Generator, GenericHasPrescribedRank) {
	for (std::uint64_t seed = 0; seed < 10; ++seed) {
		EXPECT_EQ(linalg::numeric_rank(gen_generic(spec_of(6, 4, 1, seed))), 1);
		EXPECT_EQ(linalg::numeric_rank(gen_generic(spec_of(30, 20, 7, seed))), 7);
	}
}

TEST(Generator, SameSeedSameMatrix) {
	EXPECT_EQ(gen_generic(spec_of(9, 8, 3, 42)), gen_generic(spec_of(9, 8, 3, 42)));
	EXPECT_NE(gen_generic(spec_of(9, 8, 3, 42)), gen_generic(spec_of(9, 8, 3, 43)));
}

TEST(Generator, GenericSubspaceIsMaximallyDense) {
	const Matrix M = gen_generic(spec_of(10, 10, 3, 5));
	EXPECT_EQ(nonsparsity_subspace(SubspaceBasis::column_space(M)), 8);
	EXPECT_EQ(nonsparsity_subspace(SubspaceBasis::row_space(M)), 8);
}

TEST(Generator, SparseColumnDirection) {
	GenSpec s = spec_of(8, 8, 2, 17);
	s.psi_u_target = 3;
	const Matrix M = gen_with_sparsity(s);
	EXPECT_EQ(linalg::numeric_rank(M), 2);
	EXPECT_EQ(nonsparsity_matrix(M), 3);
	EXPECT_EQ(nonsparsity_subspace(SubspaceBasis::row_space(M)), 7);
}

TEST(Generator, FullSupportRankOne) {
	GenSpec s = spec_of(6, 5, 1, 2);
	s.psi_u_target = 6;
	EXPECT_EQ(nonsparsity_matrix(gen_with_sparsity(s)), 6);
}

TEST(Generator, RankOneWithTwoNonzeroRows) {
	GenSpec s = spec_of(6, 6, 1, 8);
	s.psi_u_target = 2;
	const Matrix M = gen_with_sparsity(s);
	EXPECT_EQ(nonsparsity_matrix(M), 2);
	Index nonzero_rows = 0;
	for (Index i = 0; i < M.rows(); ++i)
		nonzero_rows += M.row(i).cwiseAbs().maxCoeff() > 0.0 ? 1 : 0;
	EXPECT_EQ(nonzero_rows, 2);
}

TEST(Generator, RowSparsityTarget) {
	GenSpec s = spec_of(7, 9, 3, 4);
	s.psi_v_target = 2;
	const Matrix M = gen_with_sparsity(s);
	EXPECT_EQ(nonsparsity_subspace(SubspaceBasis::row_space(M)), 2);
	EXPECT_EQ(nonsparsity_subspace(SubspaceBasis::column_space(M)), 5);
}

TEST(Generator, InvalidSpecs) {
	EXPECT_THROW(gen_generic(spec_of(0, 4, 1, 0)), InvalidArgument);
	EXPECT_THROW(gen_generic(spec_of(4, 4, 5, 0)), InvalidArgument);
	EXPECT_THROW(gen_generic(spec_of(4, 4, 0, 0)), InvalidArgument);

	GenSpec s = spec_of(6, 6, 2, 0);
	EXPECT_THROW(gen_with_sparsity(s), InvalidArgument); // no target
	s.psi_u_target = 7;
	EXPECT_THROW(gen_with_sparsity(s), InvalidArgument); // > m
	s.psi_u_target = 6;
	EXPECT_THROW(gen_with_sparsity(s), InvalidArgument); // > m - r + 1
	s.psi_u_target = 0;
	EXPECT_THROW(gen_with_sparsity(s), InvalidArgument);
	s.psi_u_target = 5;
	EXPECT_NO_THROW(gen_with_sparsity(s));
	EXPECT_THROW(gen_generic(s), InvalidArgument);
}

TEST(Generator, WorkedExample) {
	const Matrix M = paper_example();
	ASSERT_EQ(M.rows(), 6);
	ASSERT_EQ(M.cols(), 4);
	EXPECT_EQ(M(2, 1), 3.0);
	EXPECT_EQ(M(5, 3), 6.0);
	EXPECT_EQ(M.row(0).cwiseAbs().sum(), 0.0);
	EXPECT_EQ(linalg::numeric_rank(M), 1);
	EXPECT_EQ(nonsparsity_subspace(SubspaceBasis::column_space(M)), 2);
	EXPECT_EQ(nonsparsity_subspace(SubspaceBasis::row_space(M)), 4);
}
