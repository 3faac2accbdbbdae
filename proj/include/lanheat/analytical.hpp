#pragma once

#include <optional>
#include <vector>

#include "lanheat/materials.hpp"
#include "lanheat/quadrature.hpp"
#include "lanheat/series.hpp"
#include "lanheat/source.hpp"

namespace lanheat {

/// How the depth integral of the superposition is evaluated.
enum class XiIntegration {
  /// Closed form (two scaled complementary error functions).
  kClosedForm,
  /// Panelled Gauss-Legendre in depth as well as in time. Slow; kept for cross-checks.
  kQuadrature,
};

struct AnalyticalConfig {
  Material substrate;
  VolumetricSource source;
  double initial_temperature = 25.0;  // deg C
  std::size_t quadrature_order = 104;
  XiIntegration xi_integration = XiIntegration::kClosedForm;
  /// Overrides the depth truncation half-width of the quadrature path.
  std::optional<double> truncation_half_width;
};

/// Excess temperature of an infinite medium at time t after an instantaneous
/// plane release of q'' J/m^2 at x = 0. Throws ValidationError for t <= 0.
double plane_source_response(double x, double t, double q, const Material& m);

/// Integral over xi of exp(-beta |xi|) exp(-(x - xi)^2 / (4 alpha s)) for s > 0.
double xi_integral_closed_form(double x, double s, double beta, double alpha);

/// Semi-infinite substrate heated by the mirrored Beer-Lambert source, with an
/// adiabatic surface. Built once per configuration; evaluation is const and
/// thread-safe.
class AnalyticalModel {
 public:
  /// Throws ValidationError for a non-conducting substrate or order < 2.
  explicit AnalyticalModel(AnalyticalConfig cfg);

  const AnalyticalConfig& config() const { return cfg_; }

  /// Temperature in deg C at depth x >= 0. Returns the initial temperature for t <= 0.
  double temperature(double x, double t) const;

  TemperatureSeries history(double x, const std::vector<double>& times) const;

  /// Depth truncation used by the quadrature path at (x, t).
  double truncation_half_width(double x, double t) const;

 private:
  double excess_closed_form(double x, double t) const;
  double excess_quadrature(double x, double t) const;
  std::vector<double> time_breaks(double t, double u_lo, double u_hi) const;

  AnalyticalConfig cfg_;
  GaussLegendre rule_;
  double alpha_;
};

inline double temperature(const AnalyticalModel& model, double x, double t) { return model.temperature(x, t); }

/// Surface (x = 0) history. Times must be ascending.
TemperatureSeries surface_history(const AnalyticalModel& model, const std::vector<double>& times);

}  // namespace lanheat
