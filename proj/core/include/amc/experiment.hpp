#pragma once

#include <amc/generator.hpp>
#include <amc/oracle.hpp>
#include <amc/recovery.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace amc {

/// Relative Frobenius error at or below which a run counts as exact.
inline constexpr double kExactTolerance = 1e-8;

/// ||estimate - truth||_F <= tol * ||truth||_F (absolute when truth is zero).
bool exact_recovery(const Matrix& estimate, const Matrix& truth, double tol = kExactTolerance);

/// Where trial instances come from: a generator spec (fresh instance per
/// trial), a matrix file, or an in-memory matrix (same instance every trial).
using InstanceSource = std::variant<GenSpec, std::filesystem::path, Matrix>;

struct ExperimentConfig {
	Algorithm algo = Algorithm::erei;
	InstanceSource source = GenSpec{};
	AlgoConfig params;
	Index trials = 1;
	std::uint64_t master_seed = 0;
	bool record_time = false; ///< otherwise wall_time_s is written as 0
	unsigned jobs = 1;        ///< worker threads; output order never depends on it
	std::string label;        ///< display name in comparison tables

	void validate() const;
};

struct TrialRecord {
	Index trial = 0;
	std::uint64_t seed = 0;
	bool success = false;
	Index estimated_rank = 0;
	std::int64_t total_obs = 0;
	std::int64_t det_obs = 0;
	std::int64_t rand_obs = 0;
	double bound = 0.0;
	bool within_bound = false;
	double wall_time_s = 0.0;

	// Not part of the CSV.
	Index deterministic_columns = 0;
	Index deterministic_rows = 0;
	Index m = 0;
	Index n = 0;
};

struct ExperimentSummary {
	Algorithm algo = Algorithm::erei;
	Index trials = 0;
	Index failures = 0;
	double failure_rate = 0.0;
	double failure_budget = 0.0; ///< eps (HN2016, EREI) or eps + exp(-T psi_u psi_v / m) (ERRE)
	double mean_total = 0.0;
	double median_total = 0.0;
	Index successes_over_bound = 0;
	double bound = 0.0;

	bool failure_budget_exceeded() const { return failure_rate > failure_budget; }
};

struct ExperimentResult {
	std::vector<TrialRecord> records;
	ExperimentSummary summary;
};

/// Seed of trial `index`, a pure function of the master seed.
std::uint64_t trial_seed(std::uint64_t master_seed, Index index);

/// Runs every trial on a private oracle and scores it against the ground truth.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Bound that applies to `config.algo` on an m x n instance.
double bound_for(const ExperimentConfig& config, Index m, Index n);
double failure_budget_for(const ExperimentConfig& config, Index m);

inline constexpr const char* kCsvHeader =
    "trial,seed,success,estimated_rank,total_obs,det_obs,rand_obs,bound,within_bound,wall_time_s";

void write_csv(std::ostream& out, const std::vector<TrialRecord>& records);
void write_csv_file(const std::filesystem::path& path, const std::vector<TrialRecord>& records);
void print_summary(std::ostream& out, const ExperimentSummary& summary);

struct ComparisonRow {
	std::string label;
	Algorithm algo = Algorithm::erei;
	Index trials = 0;
	double median_total = 0.0;
	double mean_total = 0.0;
	double failure_rate = 0.0;
};

/// Runs each config over the same instance seeds. All configs must share the
/// instance source, trial count and master seed.
std::vector<ComparisonRow> compare_algorithms(const std::vector<ExperimentConfig>& configs);
void print_comparison(std::ostream& out, const std::vector<ComparisonRow>& rows);

/// Walkthrough of EREI on the 6 x 4 worked example with d = 2, r = 1 and the
/// fixed sample sets {0,4}, {1,4}, {0,2}, {4,5}.
struct ReplayReport {
	RecoveryResult result;
	ObservationLedger ledger{1, 1};
	std::vector<IndexList> omegas; ///< sample set used in each column
	std::vector<std::string> panels;            ///< mask after each column, then after completion
	bool exact = false;

	/// Count of recovered (never observed) cells.
	std::int64_t recovered() const;
};

ReplayReport replay_paper_example();
void print_replay(std::ostream& out, const ReplayReport& report);

} // namespace amc
