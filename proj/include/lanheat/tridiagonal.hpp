#pragma once

#include <span>
#include <vector>

namespace lanheat {

/// Thomas algorithm for a tridiagonal system. lower[0] and upper[n-1] are
/// ignored. Throws SolverError on a zero pivot; no pivoting is attempted, so
/// the matrix should be diagonally dominant.
std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs);

}  // namespace lanheat
