#include <amc/bounds.hpp>

#include <algorithm>
#include <cmath>

namespace amc {

namespace {

void check(Index m, Index n, Index r, double psi_u, double psi_v, double epsilon) {
	if (m < 1 || n < 1 || r < 1)
		throw InvalidArgument("bound parameters: m, n, r must be positive");
	if (!(psi_u > 0.0) || !(psi_v > 0.0))
		throw InvalidArgument("bound parameters: psi values must be positive");
	if (!(epsilon > 0.0 && epsilon < 1.0))
		throw InvalidArgument("bound parameters: epsilon must lie in (0, 1)");
}

} // namespace

double erei_bound(Index m, Index n, Index r, double psi_u, double psi_v, double epsilon) {
	check(m, n, r, psi_u, psi_v, epsilon);
	const double md = static_cast<double>(m);
	const double nd = static_cast<double>(n);
	const double rd = static_cast<double>(r);
	const double skeleton = (md + nd - rd) * rd;
	const double coherent = 2.0 * (md * nd / psi_u) * std::log(rd / epsilon);
	const double row_aware = (2.0 * md / psi_u) * (rd + 2.0 + std::log(1.0 / epsilon)) * nd / psi_v;
	return skeleton + std::min(coherent, row_aware);
}

double erre_bound(Index m, Index n, Index r, double psi_u, double psi_v, double epsilon, Index T) {
	if (T < 1)
		throw InvalidArgument("bound parameters: T must be >= 1");
	return erei_bound(m, n, r, psi_u, psi_v, epsilon) + static_cast<double>(T) * static_cast<double>(n);
}

double erre_failure_prob(Index m, double psi_u, double psi_v, double epsilon, Index T) {
	check(m, 1, 1, psi_u, psi_v, epsilon);
	if (T < 1)
		throw InvalidArgument("bound parameters: T must be >= 1");
	return epsilon + std::exp(-static_cast<double>(T) * psi_u * psi_v / static_cast<double>(m));
}

double hn2016_bound(Index m, Index n, Index r, Index d) {
	if (m < 1 || n < 1 || r < 0 || d < 0)
		throw InvalidArgument("bound parameters out of range");
	return static_cast<double>(m * r + n * d);
}

} // namespace amc
