#include <amc/bounds.hpp>
#include <amc/experiment.hpp>
#include <amc/matrix_io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace amc;

namespace {

ExperimentConfig generic_config(Algorithm algo, Index m, Index n, Index r, Index trials, std::uint64_t seed) {
	ExperimentConfig c;
	c.algo = algo;
	GenSpec spec;
	spec.m = m;
	spec.n = n;
	spec.r = r;
	c.source = spec;
	c.params.r = r;
	c.params.psi_u = m - r + 1;
	c.params.psi_v = n - r + 1;
	c.trials = trials;
	c.master_seed = seed;
	return c;
}

std::string csv_of(const ExperimentResult& result) {
	std::ostringstream out;
	write_csv(out, result.records);
	return out.str();
}

} // namespace

TEST(Experiment, SingleFullSamplingTrialOnWorkedExample) {
	ExperimentConfig c;
	c.algo = Algorithm::erei;
	c.source = paper_example();
	c.params.r = 1;
	c.params.psi_u = 2;
	c.params.psi_v = 4;
	c.params.d_override = 6;
	const auto result = run_experiment(c);
	ASSERT_EQ(result.records.size(), 1u);
	EXPECT_TRUE(result.records[0].success);
	EXPECT_TRUE(result.records[0].within_bound);
	EXPECT_EQ(result.summary.failures, 0);
}

TEST(Experiment, RecordsAreInternallyConsistent) {
	for (Algorithm algo : {Algorithm::hn2016, Algorithm::erre, Algorithm::erei}) {
		const auto result = run_experiment(generic_config(algo, 25, 20, 2, 8, 5));
		for (const auto& rec : result.records) {
			EXPECT_EQ(rec.total_obs, rec.det_obs + rec.rand_obs);
			EXPECT_EQ(rec.within_bound, static_cast<double>(rec.total_obs) <= rec.bound);
			EXPECT_EQ(rec.wall_time_s, 0.0);
			EXPECT_LE(rec.total_obs, 25 * 20);
		}
	}
}

TEST(Experiment, CsvIsAPureFunctionOfTheConfig) {
	auto c = generic_config(Algorithm::erei, 30, 20, 3, 10, 77);
	const std::string first = csv_of(run_experiment(c));
	EXPECT_EQ(first, csv_of(run_experiment(c)));
	c.jobs = 4;
	EXPECT_EQ(first, csv_of(run_experiment(c)));
	c.master_seed = 78;
	EXPECT_NE(first, csv_of(run_experiment(c)));
	EXPECT_EQ(first.substr(0, first.find('\n')), kCsvHeader);
}

TEST(Experiment, TrialSeedsDependOnlyOnMasterSeedAndIndex) {
	EXPECT_EQ(trial_seed(5, 3), trial_seed(5, 3));
	EXPECT_NE(trial_seed(5, 3), trial_seed(5, 4));
	EXPECT_NE(trial_seed(5, 3), trial_seed(6, 3));
	const auto result = run_experiment(generic_config(Algorithm::erei, 12, 10, 2, 4, 5));
	for (const auto& rec : result.records)
		EXPECT_EQ(rec.seed, trial_seed(5, rec.trial));
}

TEST(Experiment, BoundMatchesAlgorithm) {
	auto c = generic_config(Algorithm::erei, 30, 20, 3, 1, 0);
	EXPECT_DOUBLE_EQ(bound_for(c, 30, 20), erei_bound(30, 20, 3, 28, 18, 0.1));
	c.algo = Algorithm::erre;
	EXPECT_DOUBLE_EQ(bound_for(c, 30, 20), erre_bound(30, 20, 3, 28, 18, 0.1, 3));
	EXPECT_DOUBLE_EQ(failure_budget_for(c, 30), erre_failure_prob(30, 28, 18, 0.1, 3));
	c.algo = Algorithm::hn2016;
	EXPECT_DOUBLE_EQ(failure_budget_for(c, 30), 0.1);
}

TEST(Experiment, MatrixFileSource) {
	const auto path = std::filesystem::temp_directory_path() / "amc_experiment_matrix.txt";
	write_matrix_file(path, paper_example());
	ExperimentConfig c;
	c.source = path;
	c.params.r = 1;
	c.params.psi_u = 2;
	c.params.psi_v = 4;
	c.params.d_override = 6;
	c.trials = 3;
	const auto result = run_experiment(c);
	EXPECT_EQ(result.summary.failures, 0);
	std::filesystem::remove(path);

	c.source = std::filesystem::path("/nonexistent/amc.txt");
	EXPECT_THROW(run_experiment(c), InvalidArgument);
}

TEST(Experiment, InvalidConfig) {
	auto c = generic_config(Algorithm::erei, 10, 10, 2, 0, 0);
	EXPECT_THROW(run_experiment(c), InvalidArgument);
	c.trials = 1;
	c.params.epsilon = 0.0;
	EXPECT_THROW(run_experiment(c), InvalidArgument);
}

TEST(Experiment, SummaryCountsFailures) {
	// d = 1 on the worked example misses both nonzero rows in every column
	// with probability (4/6)^4, so some of 200 trials fail.
	ExperimentConfig c;
	c.source = paper_example();
	c.params.r = 1;
	c.params.psi_u = 2;
	c.params.psi_v = 4;
	c.params.d_override = 1;
	c.trials = 200;
	const auto result = run_experiment(c);
	Index failures = 0;
	for (const auto& rec : result.records)
		failures += rec.success ? 0 : 1;
	EXPECT_EQ(result.summary.failures, failures);
	EXPECT_GT(failures, 0);
	EXPECT_DOUBLE_EQ(result.summary.failure_rate, static_cast<double>(failures) / 200.0);
	std::ostringstream text;
	print_summary(text, result.summary);
	EXPECT_NE(text.str().find("failure rate"), std::string::npos);
}

TEST(Compare, SingleConfigIsOneRow) {
	const auto rows = compare_algorithms({generic_config(Algorithm::erei, 20, 20, 2, 3, 1)});
	ASSERT_EQ(rows.size(), 1u);
	EXPECT_EQ(rows[0].label, "erei");
	EXPECT_EQ(rows[0].trials, 3);
}

TEST(Compare, MismatchedGeneratorsThrow) {
	auto a = generic_config(Algorithm::erei, 20, 20, 2, 3, 1);
	auto b = generic_config(Algorithm::hn2016, 20, 21, 2, 3, 1);
	EXPECT_THROW(compare_algorithms({a, b}), InvalidArgument);
	b = generic_config(Algorithm::hn2016, 20, 20, 2, 3, 2);
	EXPECT_THROW(compare_algorithms({a, b}), InvalidArgument);
	EXPECT_THROW(compare_algorithms({}), InvalidArgument);
}

TEST(Compare, EreiUsesFewerObservationsThanHn2016OnDenseInstances) {
	auto erei = generic_config(Algorithm::erei, 60, 60, 4, 10, 3);
	auto hn = generic_config(Algorithm::hn2016, 60, 60, 4, 10, 3);
	const auto rows = compare_algorithms({erei, hn});
	EXPECT_LT(rows[0].median_total, rows[1].median_total);
	std::ostringstream text;
	print_comparison(text, rows);
	EXPECT_NE(text.str().find("hn2016"), std::string::npos);
}

TEST(Replay, WorkedExampleWalkthrough) {
	const auto report = replay_paper_example();
	EXPECT_TRUE(report.exact);
	ASSERT_EQ(report.omegas.size(), 4u);
	EXPECT_EQ(report.omegas[0], (IndexList{0, 4}));
	EXPECT_EQ(report.omegas[1], (IndexList{1, 4}));
	EXPECT_EQ(report.omegas[2], (IndexList{0, 2}));
	EXPECT_EQ(report.omegas[3], (IndexList{2, 4, 5}));
	EXPECT_EQ(report.recovered(), 9);
	EXPECT_EQ(report.panels.size(), 6u);
	std::ostringstream text;
	print_replay(text, report);
	EXPECT_NE(text.str().find("distinct observations: 15"), std::string::npos);
}
