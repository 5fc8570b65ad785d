#include <amc/matrix_io.hpp>

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace amc {

Matrix read_matrix(std::istream& in) {
	std::string line;
	if (!std::getline(in, line))
		throw InvalidArgument("matrix file: missing header line");
	std::istringstream header(line);
	long long m = 0, n = 0;
	if (!(header >> m >> n) || m < 1 || n < 1)
		throw InvalidArgument("matrix file: header must be two positive integers 'm n'");

	Matrix M(m, n);
	for (Index i = 0; i < m; ++i) {
		if (!std::getline(in, line))
			throw InvalidArgument("matrix file: expected " + std::to_string(m) + " rows, got " + std::to_string(i));
		std::istringstream row(line);
		for (Index j = 0; j < n; ++j) {
			std::string token;
			if (!(row >> token))
				throw InvalidArgument("matrix file: row " + std::to_string(i) + " has fewer than " + std::to_string(n) + " values");
			try {
				std::size_t used = 0;
				M(i, j) = std::stod(token, &used);
				if (used != token.size())
					throw std::invalid_argument(token);
			} catch (const std::exception&) {
				throw InvalidArgument("matrix file: bad number '" + token + "' in row " + std::to_string(i));
			}
		}
		std::string extra;
		if (row >> extra)
			throw InvalidArgument("matrix file: row " + std::to_string(i) + " has more than " + std::to_string(n) + " values");
	}
	return M;
}

Matrix read_matrix_file(const std::filesystem::path& path) {
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot open matrix file " + path.string());
	return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& M) {
	out << M.rows() << ' ' << M.cols() << '\n';
	char buf[32];
	for (Index i = 0; i < M.rows(); ++i) {
		for (Index j = 0; j < M.cols(); ++j) {
			std::snprintf(buf, sizeof buf, "%.17g", M(i, j));
			if (j > 0)
				out << ' ';
			out << buf;
		}
		out << '\n';
	}
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& M) {
	std::ofstream out(path);
	if (!out)
		throw std::runtime_error("cannot write matrix file " + path.string());
	write_matrix(out, M);
	if (!out)
		throw std::runtime_error("write failed for " + path.string());
}

} // namespace amc
