#pragma once

#include <amc/types.hpp>

namespace amc {

/// Observation-count bounds. All logarithms are natural.

/// (m + n - r) r + min(2 (m n / psi_u) ln(r/eps), (2 m / psi_u)(r + 2 + ln(1/eps)) n / psi_v)
double erei_bound(Index m, Index n, Index r, double psi_u, double psi_v, double epsilon);

/// erei_bound + T n
double erre_bound(Index m, Index n, Index r, double psi_u, double psi_v, double epsilon, Index T);

/// eps + exp(-T psi_u psi_v / m)
double erre_failure_prob(Index m, double psi_u, double psi_v, double epsilon, Index T);

/// m r + n d: r fully observed columns plus d samples in every column.
double hn2016_bound(Index m, Index n, Index r, Index d);

} // namespace amc
