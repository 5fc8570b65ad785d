#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace amc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;
using IndexList = std::vector<Index>;

/// Raised when caller-supplied sizes, indices or parameters are outside their domain.
class InvalidArgument : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Row/column index outside the matrix.
class IndexError : public std::out_of_range {
public:
	using std::out_of_range::out_of_range;
};

/// An algorithm reached a state its invariants rule out (e.g. a singular
/// restricted basis where the bookkeeping promises a nonsingular one).
class InvariantViolation : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

} // namespace amc
