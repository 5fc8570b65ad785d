#pragma once

#include <amc/types.hpp>

#include <cstdint>
#include <optional>

namespace amc {

/// Parameters of a synthetic rank-r instance.
struct GenSpec {
	Index m = 0;
	Index n = 0;
	Index r = 1;
	std::optional<Index> psi_u_target;
	std::optional<Index> psi_v_target;
	std::uint64_t seed = 0;

	void validate() const;
};

/**
 * M = A * B^T with Gaussian factors A (m x r), B (n x r).
 *
 * The column and row spaces are generic r-dimensional subspaces, so
 * psi(U) = m - r + 1 and psi(V) = n - r + 1 almost surely.
 */
Matrix gen_generic(const GenSpec& spec);

/**
 * Like gen_generic, but the first column of A (resp. B) is replaced by a
 * vector supported on a uniformly random set of psi_u_target (psi_v_target)
 * coordinates, with nonzeros bounded away from zero. The remaining factor
 * columns stay dense, so the sparsest direction of the column (row) space has
 * exactly the target support.
 *
 * Throws InvalidArgument if neither target is set or a target exceeds
 * m - r + 1 (n - r + 1), the largest value any r-dimensional subspace attains.
 */
Matrix gen_with_sparsity(const GenSpec& spec);

/// Dispatches to gen_with_sparsity when a target is present, else gen_generic.
Matrix generate(const GenSpec& spec);

/// The 6 x 4 rank-1 worked example: rows 2 and 5 (0-based) are
/// (1,3,2,3) and (2,6,4,6); all other rows are zero.
Matrix paper_example();

} // namespace amc
