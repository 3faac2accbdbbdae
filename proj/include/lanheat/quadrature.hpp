#pragma once

#include <cstddef>
#include <vector>

namespace lanheat {

/// Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendre {
 public:
  /// Throws ValidationError when order < 2.
  explicit GaussLegendre(std::size_t order);

  std::size_t order() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Integral of f over [a, b] with a single panel.
  template <class F>
  double integrate(F&& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(mid + half * nodes_[i]);
    return half * sum;
  }

  /// Composite rule over consecutive breakpoints (must be sorted).
  template <class F>
  double integrate_panels(F&& f, const std::vector<double>& breaks) const {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      if (breaks[i + 1] > breaks[i]) sum += integrate(f, breaks[i], breaks[i + 1]);
    }
    return sum;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// exp(x^2) erfc(x), accurate for large positive x where the factors over/underflow.
double erfcx(double x);

}  // namespace lanheat
