#include <amc/oracle.hpp>

#include <string>

namespace amc {

namespace {

void check_tag(ObservationTag tag) {
	if (tag == ObservationTag::unobserved)
		throw InvalidArgument("observation tag must be random or deterministic");
}

} // namespace

ObservationLedger::ObservationLedger(Index rows, Index cols)
    : rows_(rows), cols_(cols) {
	if (rows < 1 || cols < 1)
		throw InvalidArgument("ledger dimensions must be positive");
	tags_.assign(static_cast<std::size_t>(rows * cols), ObservationTag::unobserved);
	per_column_.assign(static_cast<std::size_t>(cols), 0);
	per_row_.assign(static_cast<std::size_t>(rows), 0);
}

bool ObservationLedger::record(Index i, Index j, ObservationTag tag) {
	check_tag(tag);
	auto& cell = tags_[flat(i, j)];
	if (cell != ObservationTag::unobserved)
		return false;
	cell = tag;
	++total_;
	++per_column_[static_cast<std::size_t>(j)];
	++per_row_[static_cast<std::size_t>(i)];
	if (tag == ObservationTag::random)
		++random_;
	else
		++deterministic_;
	return true;
}

bool ObservationLedger::record_promoting(Index i, Index j, ObservationTag tag) {
	if (record(i, j, tag))
		return true;
	auto& cell = tags_[flat(i, j)];
	if (tag == ObservationTag::deterministic && cell == ObservationTag::random) {
		cell = ObservationTag::deterministic;
		--random_;
		++deterministic_;
	}
	return false;
}

Index ObservationLedger::deterministic_columns() const {
	Index count = 0;
	for (Index j = 0; j < cols_; ++j) {
		bool all = true;
		for (Index i = 0; i < rows_ && all; ++i)
			all = tag(i, j) == ObservationTag::deterministic;
		count += all ? 1 : 0;
	}
	return count;
}

Index ObservationLedger::deterministic_rows() const {
	Index count = 0;
	for (Index i = 0; i < rows_; ++i) {
		bool all = true;
		for (Index j = 0; j < cols_ && all; ++j)
			all = tag(i, j) == ObservationTag::deterministic;
		count += all ? 1 : 0;
	}
	return count;
}

ObservationStats ObservationLedger::stats() const {
	return ObservationStats{total_, random_, deterministic_, per_column_};
}

EntryOracle::EntryOracle(Matrix ground_truth)
    : truth_(std::move(ground_truth)), ledger_(truth_.rows(), truth_.cols()) {}

void EntryOracle::check_row(Index i) const {
	if (i < 0 || i >= rows())
		throw IndexError("row index " + std::to_string(i) + " outside [0, " + std::to_string(rows()) + ")");
}

void EntryOracle::check_col(Index j) const {
	if (j < 0 || j >= cols())
		throw IndexError("column index " + std::to_string(j) + " outside [0, " + std::to_string(cols()) + ")");
}

double EntryOracle::observe_entry(Index i, Index j, ObservationTag tag) {
	check_row(i);
	check_col(j);
	ledger_.record(i, j, tag);
	return truth_(i, j);
}

Vector EntryOracle::observe_column(Index j, ObservationTag tag) {
	check_col(j);
	check_tag(tag);
	for (Index i = 0; i < rows(); ++i)
		ledger_.record_promoting(i, j, tag);
	return truth_.col(j);
}

Vector EntryOracle::observe_row(Index i, ObservationTag tag) {
	check_row(i);
	check_tag(tag);
	for (Index j = 0; j < cols(); ++j)
		ledger_.record_promoting(i, j, tag);
	return truth_.row(i).transpose();
}

Vector EntryOracle::observe_rows_of_column(std::span<const Index> rows, Index j, ObservationTag tag) {
	Vector out(static_cast<Index>(rows.size()));
	for (std::size_t k = 0; k < rows.size(); ++k)
		out(static_cast<Index>(k)) = observe_entry(rows[k], j, tag);
	return out;
}

double EntryOracle::revealed(Index i, Index j) const {
	check_row(i);
	check_col(j);
	if (!ledger_.observed(i, j))
		throw InvariantViolation("cell (" + std::to_string(i) + "," + std::to_string(j) + ") read before it was observed");
	return truth_(i, j);
}

} // namespace amc
