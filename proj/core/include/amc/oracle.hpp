#pragma once

#include <amc/types.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace amc {

enum class ObservationTag : std::uint8_t { unobserved = 0, random = 1, deterministic = 2 };

/// Snapshot of the ledger counters. Pure data, detached from the oracle.
struct ObservationStats {
	std::int64_t total = 0;
	std::int64_t random = 0;
	std::int64_t deterministic = 0;
	std::vector<std::int64_t> per_column;
};

/**
 * @brief Record of which cells have been revealed and how.
 *
 * Counts distinct cells only: a second read of a cell is free. A single-cell
 * read keeps the first tag. Full-row / full-column reads made with the
 * deterministic tag promote random cells they cover, so a fully observed
 * line is classified as deterministic regardless of what sampled it first.
 */
class ObservationLedger {
public:
	ObservationLedger(Index rows, Index cols);

	Index rows() const { return rows_; }
	Index cols() const { return cols_; }

	/// Returns true when the cell was previously unobserved.
	bool record(Index i, Index j, ObservationTag tag);
	/// Like record, but a deterministic tag overrides an earlier random one.
	bool record_promoting(Index i, Index j, ObservationTag tag);

	bool observed(Index i, Index j) const { return tag(i, j) != ObservationTag::unobserved; }
	ObservationTag tag(Index i, Index j) const { return tags_[flat(i, j)]; }

	std::int64_t total() const { return total_; }
	std::int64_t column_count(Index j) const { return per_column_[static_cast<std::size_t>(j)]; }
	std::int64_t row_count(Index i) const { return per_row_[static_cast<std::size_t>(i)]; }
	bool column_complete(Index j) const { return column_count(j) == rows_; }
	bool row_complete(Index i) const { return row_count(i) == cols_; }

	/// Number of rows / columns whose every cell carries the deterministic tag.
	Index deterministic_columns() const;
	Index deterministic_rows() const;

	ObservationStats stats() const;

private:
	std::size_t flat(Index i, Index j) const {
		return static_cast<std::size_t>(j) * static_cast<std::size_t>(rows_) + static_cast<std::size_t>(i);
	}

	Index rows_;
	Index cols_;
	std::vector<ObservationTag> tags_; // column-major
	std::vector<std::int64_t> per_column_;
	std::vector<std::int64_t> per_row_;
	std::int64_t total_ = 0;
	std::int64_t random_ = 0;
	std::int64_t deterministic_ = 0;
};

/**
 * @brief Gatekeeper over a hidden ground-truth matrix.
 *
 * Algorithms see an entry only by asking for it; every distinct cell they ask
 * for is charged to the ledger. The ground truth itself is immutable.
 *
 * `audit_ground_truth()` exists for the experiment harness to score a finished
 * run. It bypasses the ledger and must never be called from an algorithm.
 */
class EntryOracle {
public:
	explicit EntryOracle(Matrix ground_truth);

	Index rows() const { return truth_.rows(); }
	Index cols() const { return truth_.cols(); }

	double observe_entry(Index i, Index j, ObservationTag tag);
	Vector observe_column(Index j, ObservationTag tag);
	Vector observe_row(Index i, ObservationTag tag);
	/// Observe M(rows, j) cell by cell.
	Vector observe_rows_of_column(std::span<const Index> rows, Index j, ObservationTag tag);

	/// Value of a cell that is already on the ledger. Throws if it is not.
	double revealed(Index i, Index j) const;

	const ObservationLedger& ledger() const { return ledger_; }
	ObservationStats snapshot_stats() const { return ledger_.stats(); }

	const Matrix& audit_ground_truth() const { return truth_; }

private:
	void check_row(Index i) const;
	void check_col(Index j) const;

	const Matrix truth_;
	ObservationLedger ledger_;
};

} // namespace amc
