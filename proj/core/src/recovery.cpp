#include <amc/linalg.hpp>
#include <amc/recovery.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace amc {

std::string_view to_string(Algorithm algo) {
	switch (algo) {
	case Algorithm::hn2016:
		return "hn2016";
	case Algorithm::erre:
		return "erre";
	case Algorithm::erei:
		return "erei";
	}
	return "?";
}

Algorithm parse_algorithm(std::string_view name) {
	if (name == "hn2016")
		return Algorithm::hn2016;
	if (name == "erre")
		return Algorithm::erre;
	if (name == "erei")
		return Algorithm::erei;
	throw InvalidArgument("unknown algorithm '" + std::string(name) + "' (expected hn2016, erre or erei)");
}

void AlgoConfig::validate() const {
	if (r < 1)
		throw InvalidArgument("r must be >= 1");
	if (psi_u < 1 || psi_v < 1)
		throw InvalidArgument("psi_u and psi_v must be >= 1");
	if (!(epsilon > 0.0 && epsilon < 1.0))
		throw InvalidArgument("epsilon must lie in (0, 1)");
	if (T < 1)
		throw InvalidArgument("T must be >= 1");
	if (d_override && *d_override < 1)
		throw InvalidArgument("d must be >= 1");
	if (mu0 && !(*mu0 >= 1.0))
		throw InvalidArgument("mu0 must be >= 1");
	if (!(tol > 0.0))
		throw InvalidArgument("tol must be positive");
}

IndexList UniformRowSampler::draw(std::span<const Index> candidates, Index count) {
	return sample_without_replacement(candidates, count, rng_);
}

IndexList ScriptedRowSampler::draw(std::span<const Index> candidates, Index count) {
	if (next_ >= script_.size())
		throw InvalidArgument("scripted sampler exhausted after " + std::to_string(next_) + " draws");
	IndexList set = script_[next_++];
	std::sort(set.begin(), set.end());
	if (static_cast<Index>(set.size()) != count)
		throw InvalidArgument("scripted draw " + std::to_string(next_ - 1) + " has size " + std::to_string(set.size()) +
		                      ", expected " + std::to_string(count));
	for (Index i : set)
		if (std::find(candidates.begin(), candidates.end(), i) == candidates.end())
			throw InvalidArgument("scripted draw " + std::to_string(next_ - 1) + " contains ineligible row " + std::to_string(i));
	return set;
}

bool residual_independent(const SubspaceBasis& basis, std::span<const Index> omega, const Vector& col_omega, double tol) {
	if (static_cast<Index>(omega.size()) != col_omega.size())
		throw InvalidArgument("residual test: |omega| != length of the observed subvector");
	for (Index i : omega)
		if (i < 0 || i >= basis.ambient_dim())
			throw IndexError("residual test: row index outside the ambient dimension");
	const double scale = std::max(1.0, col_omega.norm());
	if (basis.empty())
		return col_omega.norm() > tol * scale;
	const Matrix U_omega = linalg::select_rows(basis.vectors(), omega);
	const Vector residual = col_omega - U_omega * linalg::pinv_solve(U_omega, col_omega);
	return residual.norm() > tol * scale;
}

Vector complete_column(const SubspaceBasis& basis, std::span<const Index> rows, const Vector& col_rows) {
	if (static_cast<Index>(rows.size()) != col_rows.size())
		throw InvalidArgument("complete_column: |R| != length of the observed subvector");
	if (basis.empty())
		return Vector::Zero(basis.ambient_dim());
	const Matrix U_R = linalg::select_rows(basis.vectors(), rows);
	if (U_R.rows() < basis.dim() || linalg::inverse_condition(U_R) <= 1e-12)
		throw InvariantViolation("complete_column: basis restricted to R is rank deficient");
	return basis.vectors() * linalg::pinv_solve(U_R, col_rows);
}

namespace {

Index clamp_budget(double value, Index lo, Index hi) {
	if (!std::isfinite(value))
		return hi;
	const double c = std::ceil(value - 1e-12);
	if (c <= static_cast<double>(lo))
		return lo;
	if (c >= static_cast<double>(hi))
		return hi;
	return static_cast<Index>(c);
}

IndexList all_rows(Index m) {
	IndexList rows(static_cast<std::size_t>(m));
	std::iota(rows.begin(), rows.end(), Index{0});
	return rows;
}

IndexList rows_outside(Index m, const IndexList& taken) {
	IndexList out;
	out.reserve(static_cast<std::size_t>(m));
	for (Index i = 0; i < m; ++i)
		if (std::find(taken.begin(), taken.end(), i) == taken.end())
			out.push_back(i);
	return out;
}

bool contains(const IndexList& list, Index value) {
	return std::find(list.begin(), list.end(), value) != list.end();
}

RecoveryResult finish(const EntryOracle& oracle, Matrix estimate, RecoveryState state, Index d) {
	RecoveryResult result;
	result.estimate = std::move(estimate);
	result.estimated_rank = state.k();
	result.stats = oracle.snapshot_stats();
	result.state = std::move(state);
	result.sample_size = d;
	return result;
}

// Append a fully observed column to the basis. A column that passed the
// residual test always has a nonzero component outside the current span.
void grow_basis(RecoveryState& state, const Vector& column, double tol) {
	if (!state.basis.extend(column, tol * std::max(1.0, column.norm())))
		throw InvariantViolation("independent column has no component outside the recovered span");
}

} // namespace

Index erei_budget(const AlgoConfig& config, Index m) {
	config.validate();
	if (config.d_override)
		return clamp_budget(static_cast<double>(*config.d_override), 1, m);
	const double md = static_cast<double>(m);
	const double rd = static_cast<double>(config.r);
	const double spread = 2.0 * md / static_cast<double>(config.psi_u);
	const double coherent = spread * std::log(rd / config.epsilon);
	const double row_aware = spread * (rd + 2.0 + std::log(1.0 / config.epsilon)) / static_cast<double>(config.psi_v);
	return clamp_budget(std::min(coherent, row_aware), 1, m);
}

Index hn2016_budget(const AlgoConfig& config, Index m) {
	config.validate();
	if (config.d_override)
		return clamp_budget(static_cast<double>(*config.d_override), 1, m);
	const double rd = static_cast<double>(config.r);
	const double log_term = std::log(rd / config.epsilon);
	if (config.mu0)
		return clamp_budget(2.0 * *config.mu0 * rd * log_term, 1, m);
	return clamp_budget(2.0 * static_cast<double>(m) / static_cast<double>(config.psi_u) * log_term, 1, m);
}

RecoveryResult run_hn2016(EntryOracle& oracle, const AlgoConfig& config) {
	UniformRowSampler sampler(config.seed);
	return run_hn2016(oracle, config, sampler);
}

RecoveryResult run_hn2016(EntryOracle& oracle, const AlgoConfig& config, RowSampler& sampler, const ColumnObserver& on_column) {
	const Index m = oracle.rows();
	const Index n = oracle.cols();
	const Index d = hn2016_budget(config, m);

	RecoveryState state(m);
	Matrix estimate = Matrix::Zero(m, n);
	const IndexList rows = all_rows(m);
	// One sample set for every column.
	const IndexList omega = sampler.draw(rows, d);

	for (Index j = 0; j < n; ++j) {
		const Vector col_omega = oracle.observe_rows_of_column(omega, j, ObservationTag::random);
		if (residual_independent(state.basis, omega, col_omega, config.tol)) {
			const Vector column = oracle.observe_column(j, ObservationTag::deterministic);
			grow_basis(state, column, config.tol);
			state.cols.push_back(j);
			estimate.col(j) = column;
		} else if (!state.basis.empty()) {
			const Matrix U_omega = linalg::select_rows(state.basis.vectors(), omega);
			estimate.col(j) = state.basis.vectors() * linalg::pinv_solve(U_omega, col_omega);
		}
		if (on_column)
			on_column(j, oracle, state);
	}
	return finish(oracle, std::move(estimate), std::move(state), d);
}

RecoveryResult run_erre(EntryOracle& oracle, const AlgoConfig& config) {
	UniformRowSampler sampler(config.seed);
	return run_erre(oracle, config, sampler);
}

RecoveryResult run_erre(EntryOracle& oracle, const AlgoConfig& config, RowSampler& sampler) {
	config.validate();
	const Index m = oracle.rows();
	const Index n = oracle.cols();
	const auto& ledger = oracle.ledger();
	// Full sampling: enough passes to exhaust every column after the last detection.
	const Index T = (config.d_override && *config.d_override >= m) ? std::max(config.T, m) : config.T;

	IndexList R;
	IndexList C;
	Index delay = 0;
	while (delay < T) {
		++delay;
		for (Index j = 0; j < n; ++j) {
			if (ledger.column_complete(j))
				continue;
			IndexList unobserved;
			for (Index i = 0; i < m; ++i)
				if (!ledger.observed(i, j))
					unobserved.push_back(i);
			const Index i = sampler.draw(unobserved, 1).front();
			oracle.observe_entry(i, j, ObservationTag::random);

			IndexList R_hat = R;
			R_hat.push_back(i);
			IndexList C_hat = C;
			C_hat.push_back(j);
			Matrix block(static_cast<Index>(R_hat.size()), static_cast<Index>(C_hat.size()));
			for (std::size_t a = 0; a < R_hat.size(); ++a)
				for (std::size_t b = 0; b < C_hat.size(); ++b)
					block(static_cast<Index>(a), static_cast<Index>(b)) =
					    oracle.observe_entry(R_hat[a], C_hat[b], ObservationTag::random);

			if (linalg::numeric_rank(block, config.tol) == block.rows()) {
				oracle.observe_column(j, ObservationTag::deterministic);
				oracle.observe_row(i, ObservationTag::deterministic);
				R = std::move(R_hat);
				C = std::move(C_hat);
				delay = 0;
			}
		}
	}

	RecoveryState state(m);
	Matrix estimate = Matrix::Zero(m, n);
	if (!C.empty()) {
		Matrix detected(m, static_cast<Index>(C.size()));
		for (std::size_t b = 0; b < C.size(); ++b)
			for (Index i = 0; i < m; ++i)
				detected(i, static_cast<Index>(b)) = oracle.revealed(i, C[b]);
		state.basis = SubspaceBasis::span_of(detected, 1e-12);
		if (state.basis.dim() != static_cast<Index>(C.size()))
			throw InvariantViolation("ERRE: detected columns are not linearly independent");
		for (std::size_t b = 0; b < C.size(); ++b)
			estimate.col(C[b]) = detected.col(static_cast<Index>(b));
		for (Index j = 0; j < n; ++j) {
			if (contains(C, j))
				continue;
			Vector col_R(static_cast<Index>(R.size()));
			for (std::size_t a = 0; a < R.size(); ++a)
				col_R(static_cast<Index>(a)) = oracle.revealed(R[a], j);
			estimate.col(j) = complete_column(state.basis, R, col_R);
		}
	}
	state.rows = std::move(R);
	state.cols = std::move(C);
	return finish(oracle, std::move(estimate), std::move(state), 0);
}

RecoveryResult run_erei(EntryOracle& oracle, const AlgoConfig& config) {
	UniformRowSampler sampler(config.seed);
	return run_erei(oracle, config, sampler);
}

RecoveryResult run_erei(EntryOracle& oracle, const AlgoConfig& config, RowSampler& sampler, const ColumnObserver& on_column) {
	const Index m = oracle.rows();
	const Index n = oracle.cols();
	const Index d = erei_budget(config, m);

	RecoveryState state(m);
	IndexList omega = sampler.draw(all_rows(m), d);

	for (Index j = 0; j < n; ++j) {
		const bool saturated = config.stop_at_rank && state.k() >= config.r;
		if (!saturated) {
			Vector col_omega(static_cast<Index>(omega.size()));
			for (std::size_t a = 0; a < omega.size(); ++a) {
				const auto tag = contains(state.rows, omega[a]) ? ObservationTag::deterministic : ObservationTag::random;
				col_omega(static_cast<Index>(a)) = oracle.observe_entry(omega[a], j, tag);
			}
			if (residual_independent(state.basis, omega, col_omega, config.tol)) {
				const Vector column = oracle.observe_column(j, ObservationTag::deterministic);
				grow_basis(state, column, config.tol);
				state.cols.push_back(j);

				// Smallest a in omega \ R keeping U restricted to R + {a} nonsingular.
				std::optional<Index> chosen;
				for (Index a : omega) {
					if (contains(state.rows, a))
						continue;
					IndexList trial = state.rows;
					trial.push_back(a);
					const Matrix U_trial = linalg::select_rows(state.basis.vectors(), trial);
					if (linalg::inverse_condition(U_trial) > config.tol) {
						chosen = a;
						break;
					}
				}
				if (!chosen)
					throw InvariantViolation("EREI: no row in the sample extends the rank of the restricted basis");
				state.rows.push_back(*chosen);
			}
		}
		if (on_column)
			on_column(j, oracle, state);

		if (j + 1 < n && !(config.stop_at_rank && state.k() >= config.r)) {
			const IndexList free_rows = rows_outside(m, state.rows);
			const Index count = std::min<Index>(d, static_cast<Index>(free_rows.size()));
			omega = sampler.draw(free_rows, count);
			omega.insert(omega.end(), state.rows.begin(), state.rows.end());
			std::sort(omega.begin(), omega.end());
		}
	}

	for (Index i : state.rows)
		oracle.observe_row(i, ObservationTag::deterministic);

	Matrix estimate = Matrix::Zero(m, n);
	const auto& ledger = oracle.ledger();
	for (Index j = 0; j < n; ++j) {
		if (ledger.column_complete(j)) {
			for (Index i = 0; i < m; ++i)
				estimate(i, j) = oracle.revealed(i, j);
			continue;
		}
		Vector col_R(static_cast<Index>(state.rows.size()));
		for (std::size_t a = 0; a < state.rows.size(); ++a)
			col_R(static_cast<Index>(a)) = oracle.revealed(state.rows[a], j);
		estimate.col(j) = complete_column(state.basis, state.rows, col_R);
	}
	return finish(oracle, std::move(estimate), std::move(state), d);
}

RecoveryResult run_algorithm(Algorithm algo, EntryOracle& oracle, const AlgoConfig& config) {
	switch (algo) {
	case Algorithm::hn2016:
		return run_hn2016(oracle, config);
	case Algorithm::erre:
		return run_erre(oracle, config);
	case Algorithm::erei:
		return run_erei(oracle, config);
	}
	throw InvalidArgument("unknown algorithm");
}

} // namespace amc
