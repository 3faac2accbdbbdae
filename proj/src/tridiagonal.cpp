#include "lanheat/tridiagonal.hpp"

#include "lanheat/errors.hpp"

namespace lanheat {

std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (lower.size() != n || upper.size() != n || rhs.size() != n) {
    throw SolverError("tridiagonal system has inconsistent sizes");
  }
  if (n == 0) return {};

  std::vector<double> c(n);
  std::vector<double> x(n);
  double pivot = diag[0];
  if (pivot == 0.0) throw SolverError("singular tridiagonal system (zero pivot at row 0)");
  c[0] = upper[0] / pivot;
  x[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = diag[i] - lower[i] * c[i - 1];
    if (pivot == 0.0) throw SolverError("singular tridiagonal system (zero pivot at row " + std::to_string(i) + ")");
    c[i] = upper[i] / pivot;
    x[i] = (rhs[i] - lower[i] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  return x;
}

}  // namespace lanheat
