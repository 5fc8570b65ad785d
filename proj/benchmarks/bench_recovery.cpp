#include <amc/generator.hpp>
#include <amc/recovery.hpp>
#include <amc/sparsity.hpp>

#include <benchmark/benchmark.h>

using namespace amc;

namespace {

Matrix generic_instance(Index m, Index n, Index r) {
	GenSpec spec;
	spec.m = m;
	spec.n = n;
	spec.r = r;
	spec.seed = 7;
	return gen_generic(spec);
}

void run(benchmark::State& state, Algorithm algo) {
	const Index m = state.range(0);
	const Index r = state.range(1);
	const Matrix M = generic_instance(m, m, r);
	AlgoConfig config;
	config.r = r;
	config.psi_u = m - r + 1;
	config.psi_v = m - r + 1;
	config.T = 3;
	std::uint64_t seed = 0;
	for (auto _ : state) {
		config.seed = ++seed;
		EntryOracle oracle(M);
		auto result = run_algorithm(algo, oracle, config);
		benchmark::DoNotOptimize(result.estimate.data());
	}
}

void BM_Erei(benchmark::State& state) { run(state, Algorithm::erei); }
void BM_Erre(benchmark::State& state) { run(state, Algorithm::erre); }
void BM_Hn2016(benchmark::State& state) { run(state, Algorithm::hn2016); }

void BM_NonsparsityEnumeration(benchmark::State& state) {
	const Index m = state.range(0);
	const Matrix M = generic_instance(m, m, 2);
	const auto basis = SubspaceBasis::column_space(M);
	for (auto _ : state)
		benchmark::DoNotOptimize(nonsparsity_subspace(basis));
}

} // namespace

BENCHMARK(BM_Erei)->Args({100, 5})->Args({200, 10})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Erre)->Args({100, 5})->Args({200, 10})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Hn2016)->Args({100, 5})->Args({200, 10})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NonsparsityEnumeration)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
