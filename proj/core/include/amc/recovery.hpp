#pragma once

#include <amc/oracle.hpp>
#include <amc/random.hpp>
#include <amc/sparsity.hpp>
#include <amc/types.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace amc {

enum class Algorithm { hn2016, erre, erei };

std::string_view to_string(Algorithm algo);
/// Accepts "hn2016", "erre", "erei". Throws InvalidArgument otherwise.
Algorithm parse_algorithm(std::string_view name);

/// Prior information and knobs handed to an algorithm.
struct AlgoConfig {
	Index r = 1;                     ///< estimated rank
	Index psi_u = 1;                 ///< nonsparsity-number of the column space
	Index psi_v = 1;                 ///< nonsparsity-number of the row space
	double epsilon = 0.1;            ///< failure budget, in (0, 1)
	Index T = 3;                     ///< ERRE delay parameter
	std::optional<Index> d_override; ///< fixed per-column sample size
	std::optional<double> mu0;       ///< column-space coherence (HN2016 budget)
	std::uint64_t seed = 0;
	double tol = 1e-9;               ///< residual / rank tolerance
	bool stop_at_rank = false;       ///< EREI: stop sampling once k reaches r

	void validate() const;
};

/// Recovered column space plus the bookkeeping row/column sets.
struct RecoveryState {
	explicit RecoveryState(Index m) : basis(m) {}

	SubspaceBasis basis;
	IndexList rows; ///< R, in insertion order
	IndexList cols; ///< fully observed (detected) columns, in insertion order

	Index k() const { return basis.dim(); }
};

struct RecoveryResult {
	Matrix estimate;
	Index estimated_rank = 0;
	ObservationStats stats;
	RecoveryState state{1};
	Index sample_size = 0; ///< d actually used (HN2016/EREI); 0 for ERRE
	bool exact = false;    ///< filled in by the harness, never by an algorithm
};

/// Source of the random row subsets. The default draws uniformly; the
/// scripted one replays fixed sets (used to walk through the worked example).
class RowSampler {
public:
	virtual ~RowSampler() = default;
	/// `count` distinct members of `candidates`, sorted ascending.
	virtual IndexList draw(std::span<const Index> candidates, Index count) = 0;
};

class UniformRowSampler final : public RowSampler {
public:
	explicit UniformRowSampler(std::uint64_t seed) : rng_(seed) {}
	IndexList draw(std::span<const Index> candidates, Index count) override;

private:
	Rng rng_;
};

class ScriptedRowSampler final : public RowSampler {
public:
	explicit ScriptedRowSampler(std::vector<IndexList> script) : script_(std::move(script)) {}
	/// Returns the next scripted set; throws InvalidArgument if it is not a
	/// subset of `candidates` of the requested size or the script ran out.
	IndexList draw(std::span<const Index> candidates, Index count) override;
	std::size_t consumed() const { return next_; }

private:
	std::vector<IndexList> script_;
	std::size_t next_ = 0;
};

/// Called after each column of the main sweep (HN2016, EREI).
using ColumnObserver = std::function<void(Index column, const EntryOracle&, const RecoveryState&)>;

/**
 * True iff col_omega has a residual against span(basis restricted to omega)
 * larger than tol * max(1, ||col_omega||). With an empty basis the projection
 * is zero.
 */
bool residual_independent(const SubspaceBasis& basis, std::span<const Index> omega, const Vector& col_omega, double tol);

/**
 * U * pinv(U_R) * col_R. Exact when the true column lies in span(U).
 * Throws InvariantViolation if U_R is rank deficient; returns zeros for an
 * empty basis.
 */
Vector complete_column(const SubspaceBasis& basis, std::span<const Index> rows, const Vector& col_rows);

/// EREI per-column sample size: ceil(min(branch1, branch2)) clamped to [1, m],
///   branch1 = 2 (m / psi_u) ln(r / eps)
///   branch2 = (2 m / psi_u)(r + 2 + ln(1 / eps)) / psi_v.
/// d_override replaces the formula (still clamped).
Index erei_budget(const AlgoConfig& config, Index m);

/// HN2016 sample size: ceil(2 mu0 r ln(r / eps)) when mu0 is known, otherwise
/// ceil(2 (m / psi_u) ln(r / eps)). Clamped to [1, m]; d_override wins.
Index hn2016_budget(const AlgoConfig& config, Index m);

RecoveryResult run_hn2016(EntryOracle& oracle, const AlgoConfig& config);
RecoveryResult run_hn2016(EntryOracle& oracle, const AlgoConfig& config, RowSampler& sampler,
                          const ColumnObserver& on_column = {});

RecoveryResult run_erre(EntryOracle& oracle, const AlgoConfig& config);
RecoveryResult run_erre(EntryOracle& oracle, const AlgoConfig& config, RowSampler& sampler);

RecoveryResult run_erei(EntryOracle& oracle, const AlgoConfig& config);
RecoveryResult run_erei(EntryOracle& oracle, const AlgoConfig& config, RowSampler& sampler,
                        const ColumnObserver& on_column = {});

/// Dispatch on the algorithm tag with a uniform sampler seeded from config.seed.
RecoveryResult run_algorithm(Algorithm algo, EntryOracle& oracle, const AlgoConfig& config);

} // namespace amc
