#include <amc/bounds.hpp>
#include <amc/experiment.hpp>
#include <amc/matrix_io.hpp>
#include <amc/random.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace amc {

namespace {

constexpr std::uint64_t kInstanceStream = 0x11;
constexpr std::uint64_t kAlgorithmStream = 0x22;

double median(std::vector<double> values) {
	if (values.empty())
		return 0.0;
	std::sort(values.begin(), values.end());
	const std::size_t mid = values.size() / 2;
	if (values.size() % 2 == 1)
		return values[mid];
	return 0.5 * (values[mid - 1] + values[mid]);
}

// Shape of the instances a config produces, without generating one.
std::pair<Index, Index> instance_shape(const ExperimentConfig& config, const Matrix* fixed) {
	if (const auto* spec = std::get_if<GenSpec>(&config.source))
		return {spec->m, spec->n};
	return {fixed->rows(), fixed->cols()};
}

bool same_source(const InstanceSource& a, const InstanceSource& b) {
	if (a.index() != b.index())
		return false;
	if (const auto* sa = std::get_if<GenSpec>(&a)) {
		const auto& sb = std::get<GenSpec>(b);
		return sa->m == sb.m && sa->n == sb.n && sa->r == sb.r && sa->psi_u_target == sb.psi_u_target &&
		       sa->psi_v_target == sb.psi_v_target && sa->seed == sb.seed;
	}
	if (const auto* pa = std::get_if<std::filesystem::path>(&a))
		return *pa == std::get<std::filesystem::path>(b);
	const auto& ma = std::get<Matrix>(a);
	const auto& mb = std::get<Matrix>(b);
	return ma.rows() == mb.rows() && ma.cols() == mb.cols() && ma == mb;
}

} // namespace

bool exact_recovery(const Matrix& estimate, const Matrix& truth, double tol) {
	if (estimate.rows() != truth.rows() || estimate.cols() != truth.cols())
		return false;
	const double err = (estimate - truth).norm();
	const double scale = truth.norm();
	if (scale == 0.0)
		return err <= tol;
	return err <= tol * scale;
}

void ExperimentConfig::validate() const {
	params.validate();
	if (trials < 1)
		throw InvalidArgument("trials must be >= 1");
	if (jobs < 1)
		throw InvalidArgument("jobs must be >= 1");
	if (const auto* spec = std::get_if<GenSpec>(&source))
		spec->validate();
	if (const auto* path = std::get_if<std::filesystem::path>(&source))
		if (!std::filesystem::exists(*path))
			throw InvalidArgument("matrix file " + path->string() + " does not exist");
}

std::uint64_t trial_seed(std::uint64_t master_seed, Index index) {
	return derive_seed(master_seed, static_cast<std::uint64_t>(index));
}

double bound_for(const ExperimentConfig& config, Index m, Index n) {
	const auto& p = config.params;
	const double psi_u = static_cast<double>(p.psi_u);
	const double psi_v = static_cast<double>(p.psi_v);
	switch (config.algo) {
	case Algorithm::erei:
		return erei_bound(m, n, p.r, psi_u, psi_v, p.epsilon);
	case Algorithm::erre:
		return erre_bound(m, n, p.r, psi_u, psi_v, p.epsilon, p.T);
	case Algorithm::hn2016:
		return hn2016_bound(m, n, p.r, hn2016_budget(p, m));
	}
	return 0.0;
}

double failure_budget_for(const ExperimentConfig& config, Index m) {
	const auto& p = config.params;
	if (config.algo == Algorithm::erre)
		return erre_failure_prob(m, static_cast<double>(p.psi_u), static_cast<double>(p.psi_v), p.epsilon, p.T);
	return p.epsilon;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
	config.validate();

	std::optional<Matrix> fixed;
	if (const auto* path = std::get_if<std::filesystem::path>(&config.source))
		fixed = read_matrix_file(*path);
	else if (const auto* matrix = std::get_if<Matrix>(&config.source))
		fixed = *matrix;

	const auto [m, n] = instance_shape(config, fixed ? &*fixed : nullptr);
	const double bound = bound_for(config, m, n);

	std::vector<TrialRecord> records(static_cast<std::size_t>(config.trials));
	auto run_trial = [&](Index t) {
		TrialRecord rec;
		rec.trial = t;
		rec.seed = trial_seed(config.master_seed, t);
		Matrix truth;
		if (fixed) {
			truth = *fixed;
		} else {
			GenSpec spec = std::get<GenSpec>(config.source);
			spec.seed = derive_seed(rec.seed, kInstanceStream);
			truth = generate(spec);
		}
		AlgoConfig params = config.params;
		params.seed = derive_seed(rec.seed, kAlgorithmStream);

		const auto start = std::chrono::steady_clock::now();
		EntryOracle oracle(std::move(truth));
		const RecoveryResult result = run_algorithm(config.algo, oracle, params);
		const auto stop = std::chrono::steady_clock::now();

		rec.success = exact_recovery(result.estimate, oracle.audit_ground_truth());
		rec.estimated_rank = result.estimated_rank;
		rec.total_obs = result.stats.total;
		rec.det_obs = result.stats.deterministic;
		rec.rand_obs = result.stats.random;
		rec.bound = bound;
		rec.within_bound = static_cast<double>(rec.total_obs) <= bound;
		rec.wall_time_s = config.record_time ? std::chrono::duration<double>(stop - start).count() : 0.0;
		rec.deterministic_columns = oracle.ledger().deterministic_columns();
		rec.deterministic_rows = oracle.ledger().deterministic_rows();
		rec.m = m;
		rec.n = n;
		records[static_cast<std::size_t>(t)] = rec;
	};

	const unsigned workers = std::min<unsigned>(config.jobs, static_cast<unsigned>(config.trials));
	if (workers <= 1) {
		for (Index t = 0; t < config.trials; ++t)
			run_trial(t);
	} else {
		std::atomic<Index> next{0};
		std::vector<std::jthread> pool;
		for (unsigned w = 0; w < workers; ++w)
			pool.emplace_back([&] {
				for (Index t = next++; t < config.trials; t = next++)
					run_trial(t);
			});
	}

	ExperimentSummary summary;
	summary.algo = config.algo;
	summary.trials = config.trials;
	summary.bound = bound;
	summary.failure_budget = failure_budget_for(config, m);
	std::vector<double> totals;
	double sum = 0.0;
	for (const auto& rec : records) {
		summary.failures += rec.success ? 0 : 1;
		summary.successes_over_bound += (rec.success && !rec.within_bound) ? 1 : 0;
		totals.push_back(static_cast<double>(rec.total_obs));
		sum += static_cast<double>(rec.total_obs);
	}
	summary.failure_rate = static_cast<double>(summary.failures) / static_cast<double>(config.trials);
	summary.mean_total = sum / static_cast<double>(config.trials);
	summary.median_total = median(std::move(totals));
	return ExperimentResult{std::move(records), summary};
}

void write_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
	out << kCsvHeader << '\n';
	char bound[64];
	char wall[64];
	for (const auto& rec : records) {
		std::snprintf(bound, sizeof bound, "%.6f", rec.bound);
		std::snprintf(wall, sizeof wall, "%.6f", rec.wall_time_s);
		out << rec.trial << ',' << rec.seed << ',' << (rec.success ? 1 : 0) << ',' << rec.estimated_rank << ','
		    << rec.total_obs << ',' << rec.det_obs << ',' << rec.rand_obs << ',' << bound << ','
		    << (rec.within_bound ? 1 : 0) << ',' << wall << '\n';
	}
}

void write_csv_file(const std::filesystem::path& path, const std::vector<TrialRecord>& records) {
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw std::runtime_error("cannot write CSV file " + path.string());
	write_csv(out, records);
	if (!out)
		throw std::runtime_error("write failed for " + path.string());
}

void print_summary(std::ostream& out, const ExperimentSummary& s) {
	char line[256];
	out << "algorithm:            " << to_string(s.algo) << '\n';
	out << "trials:               " << s.trials << '\n';
	std::snprintf(line, sizeof line, "failure rate:         %.4f (%lld failures)\n", s.failure_rate, static_cast<long long>(s.failures));
	out << line;
	std::snprintf(line, sizeof line, "failure budget:       %.4f%s\n", s.failure_budget, s.failure_budget_exceeded() ? "  [EXCEEDED]" : "");
	out << line;
	std::snprintf(line, sizeof line, "observations mean:    %.2f\nobservations median:  %.1f\n", s.mean_total, s.median_total);
	out << line;
	std::snprintf(line, sizeof line, "bound:                %.4f\n", s.bound);
	out << line;
	out << "successes over bound: " << s.successes_over_bound << (s.successes_over_bound > 0 ? "  [VIOLATION]" : "") << '\n';
}

std::vector<ComparisonRow> compare_algorithms(const std::vector<ExperimentConfig>& configs) {
	if (configs.empty())
		throw InvalidArgument("compare_algorithms needs at least one config");
	const auto& first = configs.front();
	for (const auto& c : configs) {
		if (!same_source(c.source, first.source))
			throw InvalidArgument("compare_algorithms: configs use different instance generators");
		if (c.trials != first.trials || c.master_seed != first.master_seed)
			throw InvalidArgument("compare_algorithms: configs must share trials and master seed");
	}
	std::vector<ComparisonRow> rows;
	for (const auto& c : configs) {
		const ExperimentResult result = run_experiment(c);
		ComparisonRow row;
		row.label = c.label.empty() ? std::string(to_string(c.algo)) : c.label;
		row.algo = c.algo;
		row.trials = result.summary.trials;
		row.median_total = result.summary.median_total;
		row.mean_total = result.summary.mean_total;
		row.failure_rate = result.summary.failure_rate;
		rows.push_back(std::move(row));
	}
	return rows;
}

void print_comparison(std::ostream& out, const std::vector<ComparisonRow>& rows) {
	char line[256];
	std::snprintf(line, sizeof line, "%-24s %-8s %7s %12s %12s %9s\n", "label", "algo", "trials", "median_obs", "mean_obs", "fail_rate");
	out << line;
	for (const auto& row : rows) {
		std::snprintf(line, sizeof line, "%-24s %-8s %7lld %12.1f %12.2f %9.4f\n", row.label.c_str(),
		              std::string(to_string(row.algo)).c_str(), static_cast<long long>(row.trials), row.median_total,
		              row.mean_total, row.failure_rate);
		out << line;
	}
}

namespace {

// One line per row; each cell is "<value><class>", class in
// {r: random, D: deterministic, ~: recovered, ' ': not yet touched}.
std::string render_panel(const Matrix& values, const ObservationLedger& ledger, bool show_recovered) {
	std::ostringstream out;
	char cell[32];
	for (Index i = 0; i < values.rows(); ++i) {
		for (Index j = 0; j < values.cols(); ++j) {
			char cls = ' ';
			switch (ledger.tag(i, j)) {
			case ObservationTag::random:
				cls = 'r';
				break;
			case ObservationTag::deterministic:
				cls = 'D';
				break;
			case ObservationTag::unobserved:
				cls = show_recovered ? '~' : ' ';
				break;
			}
			const bool visible = ledger.observed(i, j) || show_recovered;
			if (visible)
				std::snprintf(cell, sizeof cell, "%3g%c", values(i, j), cls);
			else
				std::snprintf(cell, sizeof cell, "   .");
			out << cell << (j + 1 < values.cols() ? " " : "");
		}
		out << '\n';
	}
	return out.str();
}

} // namespace

std::int64_t ReplayReport::recovered() const {
	return static_cast<std::int64_t>(ledger.rows() * ledger.cols()) - ledger.total();
}

ReplayReport replay_paper_example() {
	const Matrix truth = paper_example();
	EntryOracle oracle(truth);

	const std::vector<IndexList> script = {{0, 4}, {1, 4}, {0, 2}, {4, 5}};
	ScriptedRowSampler sampler(script);

	AlgoConfig config;
	config.r = 1;
	config.psi_u = 2;
	config.psi_v = 4;
	config.epsilon = 0.1;
	config.d_override = 2;

	ReplayReport report;
	IndexList rows_before;
	report.omegas.reserve(script.size());
	auto observer = [&](Index column, const EntryOracle& o, const RecoveryState& state) {
		IndexList omega = script[static_cast<std::size_t>(column)];
		omega.insert(omega.end(), rows_before.begin(), rows_before.end());
		std::sort(omega.begin(), omega.end());
		report.omegas.push_back(std::move(omega));
		rows_before = state.rows;
		report.panels.push_back(render_panel(o.audit_ground_truth(), o.ledger(), false));
	};

	report.result = run_erei(oracle, config, sampler, observer);
	report.panels.push_back(render_panel(oracle.audit_ground_truth(), oracle.ledger(), false));
	report.panels.push_back(render_panel(report.result.estimate, oracle.ledger(), true));
	report.ledger = oracle.ledger();
	report.exact = exact_recovery(report.result.estimate, oracle.audit_ground_truth());
	return report;
}

void print_replay(std::ostream& out, const ReplayReport& report) {
	out << "EREI on the 6x4 rank-1 worked example, d = 2, r = 1\n";
	out << "cell classes: r = sampled at random, D = observed deterministically, ~ = recovered\n\n";
	for (std::size_t j = 0; j < report.omegas.size(); ++j) {
		out << "after column " << j << ", omega = {";
		for (std::size_t a = 0; a < report.omegas[j].size(); ++a)
			out << (a ? "," : "") << report.omegas[j][a];
		out << "}\n" << report.panels[j] << '\n';
	}
	const std::size_t cols = report.omegas.size();
	out << "after observing rows R\n" << report.panels[cols] << '\n';
	out << "after completion\n" << report.panels[cols + 1] << '\n';

	const auto& stats = report.result.stats;
	out << "R = {";
	for (std::size_t a = 0; a < report.result.state.rows.size(); ++a)
		out << (a ? "," : "") << report.result.state.rows[a];
	out << "}\n";
	out << "estimated rank:        " << report.result.estimated_rank << '\n';
	out << "distinct observations: " << stats.total << " (random " << stats.random << ", deterministic " << stats.deterministic
	    << ", recovered " << report.recovered() << ")\n";
	out << "deterministic columns: " << report.ledger.deterministic_columns() << ", rows: " << report.ledger.deterministic_rows() << '\n';
	out << "exact recovery:        " << (report.exact ? "yes" : "no") << '\n';
}

} // namespace amc
