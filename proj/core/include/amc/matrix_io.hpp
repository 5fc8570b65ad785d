#pragma once

#include <amc/types.hpp>

#include <filesystem>
#include <iosfwd>

namespace amc {

/// Text format: first line "m n", then m lines of n space-separated decimals.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::filesystem::path& path);

/// Writes with round-trip precision (%.17g).
void write_matrix(std::ostream& out, const Matrix& M);
void write_matrix_file(const std::filesystem::path& path, const Matrix& M);

} // namespace amc
