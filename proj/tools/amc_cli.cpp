// amc: adaptive matrix completion workbench.
//
//   amc gen           emit a synthetic low-rank matrix file
//   amc psi           sparsity-number / coherence report for a matrix file
//   amc run           seeded Monte-Carlo trials of one algorithm, CSV + summary
//   amc compare       several algorithms over the same instance seeds
//   amc replay-paper  EREI walkthrough on the 6x4 worked example

#include <amc/experiment.hpp>
#include <amc/generator.hpp>
#include <amc/linalg.hpp>
#include <amc/matrix_io.hpp>
#include <amc/sparsity.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct InstanceOptions {
	std::optional<long long> m;
	std::optional<long long> n;
	std::optional<long long> rank;
	std::optional<long long> psi_u;
	std::optional<long long> psi_v;
	std::string matrix_file;
	bool paper_example = false;
};

struct AlgoOptions {
	double epsilon = 0.1;
	long long T = 3;
	std::optional<long long> d;
	std::optional<double> mu0;
	bool early_exit = false;
};

struct RunOptions {
	long long trials = 1;
	std::uint64_t seed = 0;
	std::string out;
	unsigned jobs = 1;
	bool record_time = false;
};

void add_instance_flags(CLI::App* cmd, InstanceOptions& o) {
	cmd->add_option("--m", o.m, "Rows of generated instances")->check(CLI::PositiveNumber);
	cmd->add_option("--n", o.n, "Columns of generated instances")->check(CLI::PositiveNumber);
	cmd->add_option("--rank", o.rank, "Rank r (generation target and algorithm input)")->check(CLI::PositiveNumber);
	cmd->add_option("--psi-u", o.psi_u, "Column-space nonsparsity-number (target and input)")->check(CLI::PositiveNumber);
	cmd->add_option("--psi-v", o.psi_v, "Row-space nonsparsity-number (target and input)")->check(CLI::PositiveNumber);
	cmd->add_option("--matrix-file", o.matrix_file, "Use a fixed matrix from a file instead of generating")->check(CLI::ExistingFile);
	cmd->add_flag("--paper-example", o.paper_example, "Use the 6x4 worked example as the fixed instance");
}

void add_algo_flags(CLI::App* cmd, AlgoOptions& o) {
	cmd->add_option("--epsilon", o.epsilon, "Failure budget, in (0,1)")->check(CLI::Range(0.0, 1.0));
	cmd->add_option("--T", o.T, "ERRE delay parameter")->check(CLI::PositiveNumber);
	cmd->add_option("--d", o.d, "Per-column sample size override")->check(CLI::PositiveNumber);
	cmd->add_option("--mu0", o.mu0, "Column-space coherence (HN2016 budget; EREI fallback psi_u)")->check(CLI::Range(1.0, 1e300));
	cmd->add_flag("--early-exit", o.early_exit, "EREI: stop sampling once the estimated rank reaches --rank");
}

void add_run_flags(CLI::App* cmd, RunOptions& o) {
	cmd->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
	cmd->add_option("--seed", o.seed, "Master seed");
	cmd->add_option("--out", o.out, "CSV output path");
	cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
	cmd->add_flag("--record-time", o.record_time, "Write measured wall time instead of 0 in the CSV");
}

void require(bool condition, const std::string& message) {
	if (!condition)
		throw amc::InvalidArgument(message);
}

// Instance source plus the algorithm inputs derived from it.
struct ResolvedInstance {
	amc::InstanceSource source;
	amc::Index m = 0;
	amc::Index r = 1;
	amc::Index psi_u = 1;
	amc::Index psi_v = 1;
};

ResolvedInstance resolve_instance(const InstanceOptions& o, const AlgoOptions& a) {
	ResolvedInstance out;
	const bool fixed = o.paper_example || !o.matrix_file.empty();
	require(!(o.paper_example && !o.matrix_file.empty()), "--paper-example and --matrix-file are mutually exclusive");
	if (fixed) {
		require(!o.m && !o.n, "--m/--n apply only to generated instances");
		amc::Matrix M = o.paper_example ? amc::paper_example() : amc::read_matrix_file(o.matrix_file);
		out.m = M.rows();
		out.r = o.rank ? *o.rank : std::max<amc::Index>(amc::linalg::numeric_rank(M), 1);
		const bool zero = M.cwiseAbs().maxCoeff() == 0.0;
		auto measured = [&](const amc::Matrix& X) -> amc::Index {
			return zero ? 1 : amc::nonsparsity_matrix(X);
		};
		if (o.psi_u)
			out.psi_u = *o.psi_u;
		else if (a.mu0)
			out.psi_u = amc::psi_from_coherence(*a.mu0, out.r, out.m);
		else
			out.psi_u = measured(M);
		if (o.psi_v)
			out.psi_v = *o.psi_v;
		else if (a.mu0)
			out.psi_v = 1;
		else
			out.psi_v = measured(M.transpose());
		if (o.paper_example)
			out.source = std::move(M);
		else
			out.source = std::filesystem::path(o.matrix_file);
		return out;
	}

	require(o.m && o.n, "generated instances need --m and --n (or --matrix-file / --paper-example)");
	amc::GenSpec spec;
	spec.m = *o.m;
	spec.n = *o.n;
	spec.r = o.rank ? *o.rank : 1;
	spec.psi_u_target = o.psi_u ? std::optional<amc::Index>(*o.psi_u) : std::nullopt;
	spec.psi_v_target = o.psi_v ? std::optional<amc::Index>(*o.psi_v) : std::nullopt;
	spec.validate();
	out.m = spec.m;
	out.r = spec.r;
	out.psi_u = o.psi_u ? *o.psi_u : spec.m - spec.r + 1;
	out.psi_v = o.psi_v ? *o.psi_v : spec.n - spec.r + 1;
	if (a.mu0 && !o.psi_u) {
		out.psi_u = amc::psi_from_coherence(*a.mu0, spec.r, spec.m);
		if (!o.psi_v)
			out.psi_v = 1;
	}
	out.source = spec;
	return out;
}

amc::ExperimentConfig make_config(amc::Algorithm algo, const ResolvedInstance& inst, const AlgoOptions& a, const RunOptions& run) {
	amc::ExperimentConfig config;
	config.algo = algo;
	config.source = inst.source;
	config.params.r = inst.r;
	config.params.psi_u = inst.psi_u;
	config.params.psi_v = inst.psi_v;
	config.params.epsilon = a.epsilon;
	config.params.T = a.T;
	config.params.d_override = a.d ? std::optional<amc::Index>(*a.d) : std::nullopt;
	config.params.mu0 = a.mu0;
	config.params.stop_at_rank = a.early_exit;
	config.trials = run.trials;
	config.master_seed = run.seed;
	config.jobs = run.jobs;
	config.record_time = run.record_time;
	require(a.epsilon > 0.0 && a.epsilon < 1.0, "--epsilon must lie strictly between 0 and 1");
	config.validate();
	return config;
}

// "erei", "erei:psi_v=1", "hn2016:d=20,mu0=2.5"
amc::ExperimentConfig parse_variant(const std::string& text, const ResolvedInstance& inst, const AlgoOptions& a, const RunOptions& run) {
	const auto colon = text.find(':');
	amc::ExperimentConfig config = make_config(amc::parse_algorithm(text.substr(0, colon)), inst, a, run);
	config.label = text;
	if (colon == std::string::npos)
		return config;
	std::stringstream rest(text.substr(colon + 1));
	std::string item;
	while (std::getline(rest, item, ',')) {
		const auto eq = item.find('=');
		require(eq != std::string::npos, "variant override '" + item + "' must be key=value");
		const std::string key = item.substr(0, eq);
		const std::string value = item.substr(eq + 1);
		try {
			if (key == "psi_u")
				config.params.psi_u = std::stoll(value);
			else if (key == "psi_v")
				config.params.psi_v = std::stoll(value);
			else if (key == "d")
				config.params.d_override = std::stoll(value);
			else if (key == "T")
				config.params.T = std::stoll(value);
			else if (key == "epsilon")
				config.params.epsilon = std::stod(value);
			else if (key == "mu0")
				config.params.mu0 = std::stod(value);
			else
				throw amc::InvalidArgument("unknown variant key '" + key + "'");
		} catch (const std::logic_error& e) {
			if (dynamic_cast<const amc::InvalidArgument*>(&e))
				throw;
			throw amc::InvalidArgument("bad value in variant override '" + item + "'");
		}
	}
	config.validate();
	return config;
}

int cmd_gen(const InstanceOptions& o, std::uint64_t seed, const std::string& out) {
	require(o.m && o.n, "gen needs --m and --n");
	amc::GenSpec spec;
	spec.m = *o.m;
	spec.n = *o.n;
	spec.r = o.rank ? *o.rank : 1;
	spec.psi_u_target = o.psi_u ? std::optional<amc::Index>(*o.psi_u) : std::nullopt;
	spec.psi_v_target = o.psi_v ? std::optional<amc::Index>(*o.psi_v) : std::nullopt;
	spec.seed = seed;
	const amc::Matrix M = amc::generate(spec);
	if (out.empty())
		amc::write_matrix(std::cout, M);
	else
		amc::write_matrix_file(out, M);
	return 0;
}

int cmd_psi(const std::string& file, bool paper, long long cap) {
	require(paper != !file.empty(), "psi needs exactly one of --matrix-file or --paper-example");
	const amc::Matrix M = paper ? amc::paper_example() : amc::read_matrix_file(file);
	amc::EnumerationOptions opts;
	opts.cap = cap;
	const auto col = amc::SubspaceBasis::column_space(M);
	const auto row = amc::SubspaceBasis::row_space(M);
	require(!col.empty(), "psi: the matrix is zero");
	const amc::Index psi_u = amc::nonsparsity_subspace(col, opts);
	const amc::Index psi_v = amc::nonsparsity_subspace(row, opts);
	std::printf("rows: %lld\ncols: %lld\nrank: %lld\n", static_cast<long long>(M.rows()), static_cast<long long>(M.cols()),
	            static_cast<long long>(col.dim()));
	std::printf("psi_column_space: %lld\nsparsity_column_space: %lld\n", static_cast<long long>(psi_u),
	            static_cast<long long>(M.rows() - psi_u));
	std::printf("psi_row_space: %lld\nsparsity_row_space: %lld\n", static_cast<long long>(psi_v),
	            static_cast<long long>(M.cols() - psi_v));
	std::printf("coherence_column_space: %.6f\ncoherence_row_space: %.6f\n", amc::coherence(col), amc::coherence(row));
	return 0;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Adaptive exact low-rank matrix completion workbench"};
	app.require_subcommand(1);

	InstanceOptions inst;
	AlgoOptions algo;
	RunOptions run;

	auto* gen = app.add_subcommand("gen", "Emit a synthetic rank-r matrix in the text matrix format");
	std::uint64_t gen_seed = 0;
	std::string gen_out;
	gen->add_option("--m", inst.m, "Rows")->check(CLI::PositiveNumber);
	gen->add_option("--n", inst.n, "Columns")->check(CLI::PositiveNumber);
	gen->add_option("--rank", inst.rank, "Rank")->check(CLI::PositiveNumber);
	gen->add_option("--psi-u", inst.psi_u, "Column-space nonsparsity target")->check(CLI::PositiveNumber);
	gen->add_option("--psi-v", inst.psi_v, "Row-space nonsparsity target")->check(CLI::PositiveNumber);
	gen->add_option("--seed", gen_seed, "Seed");
	gen->add_option("--out", gen_out, "Output file (default stdout)");

	auto* psi = app.add_subcommand("psi", "Report nonsparsity, sparsity-number and coherence of a matrix");
	std::string psi_file;
	bool psi_paper = false;
	long long cap = amc::kDefaultEnumerationCap;
	psi->add_option("--matrix-file", psi_file, "Matrix file")->check(CLI::ExistingFile);
	psi->add_flag("--paper-example", psi_paper, "Use the 6x4 worked example");
	psi->add_option("--cap", cap, "Enumeration cap on the ambient dimension")->check(CLI::PositiveNumber);

	auto* runcmd = app.add_subcommand("run", "Run seeded trials of one algorithm");
	std::string algo_name = "erei";
	runcmd->add_option("--algo", algo_name, "hn2016 | erre | erei")->check(CLI::IsMember({"hn2016", "erre", "erei"}));
	add_instance_flags(runcmd, inst);
	add_algo_flags(runcmd, algo);
	add_run_flags(runcmd, run);

	auto* cmp = app.add_subcommand("compare", "Compare algorithms over shared instance seeds");
	std::vector<std::string> variants;
	cmp->add_option("--algo", variants, "Algorithm variants, e.g. erei hn2016 erei:psi_v=1")->required();
	add_instance_flags(cmp, inst);
	add_algo_flags(cmp, algo);
	add_run_flags(cmp, run);

	auto* replay = app.add_subcommand("replay-paper", "EREI walkthrough on the 6x4 worked example");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		return app.exit(e);
	}

	try {
		if (*gen)
			return cmd_gen(inst, gen_seed, gen_out);
		if (*psi)
			return cmd_psi(psi_file, psi_paper, cap);
		if (*replay) {
			const auto report = amc::replay_paper_example();
			amc::print_replay(std::cout, report);
			return report.exact ? 0 : 1;
		}
		const ResolvedInstance resolved = resolve_instance(inst, algo);
		if (*runcmd) {
			const auto config = make_config(amc::parse_algorithm(algo_name), resolved, algo, run);
			const auto result = amc::run_experiment(config);
			if (!run.out.empty())
				amc::write_csv_file(run.out, result.records);
			else
				amc::write_csv(std::cout, result.records);
			amc::print_summary(run.out.empty() ? std::cerr : std::cout, result.summary);
			return 0;
		}
		if (*cmp) {
			std::vector<amc::ExperimentConfig> configs;
			for (const auto& v : variants)
				configs.push_back(parse_variant(v, resolved, algo, run));
			const auto rows = amc::compare_algorithms(configs);
			if (!run.out.empty()) {
				std::ofstream out(run.out);
				if (!out)
					throw std::runtime_error("cannot write " + run.out);
				amc::print_comparison(out, rows);
			}
			amc::print_comparison(std::cout, rows);
			return 0;
		}
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	}
	return 0;
}
