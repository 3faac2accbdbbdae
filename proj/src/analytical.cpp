#include "lanheat/analytical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lanheat/errors.hpp"

namespace lanheat {

namespace {

// Levels of geometric grading towards tau -> t, where the depth kernel
// collapses onto the source profile.
constexpr int kGradingLevels = 40;

// exp(-beta|xi|) convolved with the unit-height Gaussian kernel, divided by sqrt(pi alpha s).
double mirror_sum(double x, double s, double beta, double alpha) {
  x = std::abs(x);
  const double a = alpha * s;
  const double root = std::sqrt(a);
  const double z_near = (2.0 * beta * a - x) / (2.0 * root);
  const double z_far = (2.0 * beta * a + x) / (2.0 * root);
  const double gauss = std::exp(-x * x / (4.0 * a));
  const double near = z_near >= 0.0 ? gauss * erfcx(z_near) : std::exp(beta * beta * a - beta * x) * std::erfc(z_near);
  return near + gauss * erfcx(z_far);
}

std::string describe_node(double x, double t, double tau) {
  std::ostringstream os;
  os << "non-finite integrand at x=" << x << " m, t=" << t << " s, tau=" << tau << " s";
  return os.str();
}

}  // namespace

double plane_source_response(double x, double t, double q, const Material& m) {
  if (!(t > 0.0)) throw ValidationError("t", "plane source response requires t > 0");
  const double alpha = thermal_diffusivity(m);
  return q / (2.0 * m.volumetric_heat_capacity() * std::sqrt(std::numbers::pi * alpha * t)) *
         std::exp(-x * x / (4.0 * alpha * t));
}

double xi_integral_closed_form(double x, double s, double beta, double alpha) {
  if (!(s > 0.0)) throw ValidationError("s", "elapsed time must be positive");
  return std::sqrt(std::numbers::pi * alpha * s) * mirror_sum(x, s, beta, alpha);
}

AnalyticalModel::AnalyticalModel(AnalyticalConfig cfg)
    : cfg_(std::move(cfg)), rule_(cfg_.quadrature_order), alpha_(thermal_diffusivity(cfg_.substrate)) {
  validate(cfg_.substrate);
  if (!(alpha_ > 0.0)) throw ValidationError("substrate.thermal_conductivity", "analytical model needs k > 0");
  if (!(cfg_.source.beta >= 0.0)) throw ValidationError("source.beta", "must be non-negative");
}

double AnalyticalModel::truncation_half_width(double x, double t) const {
  if (cfg_.truncation_half_width) return *cfg_.truncation_half_width;
  const double source_extent = cfg_.source.beta > 0.0 ? 10.0 / cfg_.source.beta : 0.0;
  return std::max(source_extent, std::abs(x) + 6.0 * std::sqrt(4.0 * alpha_ * t));
}

std::vector<double> AnalyticalModel::time_breaks(double t, double u_lo, double u_hi) const {
  std::vector<double> breaks{u_lo, u_hi};
  const auto& pulse = cfg_.source.pulse;
  for (int k = 1; k < 6; ++k) {
    const double tau = k * pulse.sigma;
    if (tau < t - u_lo * u_lo) breaks.push_back(std::sqrt(t - tau));
  }
  double step = u_hi - u_lo;
  for (int k = 0; k < kGradingLevels; ++k) {
    step *= 0.5;
    breaks.push_back(u_lo + step);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return breaks;
}

// Time integration uses u = sqrt(t - tau), which absorbs the (t - tau)^(-1/2)
// factor of the plane-source kernel: dtau / sqrt(t - tau) = 2 du.
double AnalyticalModel::excess_closed_form(double x, double t) const {
  const auto& src = cfg_.source;
  const double tau_end = std::min(t, src.pulse.window);
  const double u_lo = std::sqrt(t - tau_end);
  const double u_hi = std::sqrt(t);
  const double scale = src.absorbed_fraction * src.beta / cfg_.substrate.volumetric_heat_capacity();

  const auto integrand = [&](double u) {
    const double tau = t - u * u;
    const double power = intensity(src.pulse, tau);
    if (power == 0.0) return 0.0;
    const double value = power * u * mirror_sum(x, u * u, src.beta, alpha_);
    if (!std::isfinite(value)) throw SolverError(describe_node(x, t, tau));
    return value;
  };
  return scale * rule_.integrate_panels(integrand, time_breaks(t, u_lo, u_hi));
}

double AnalyticalModel::excess_quadrature(double x, double t) const {
  const auto& src = cfg_.source;
  const double beta = src.beta;
  const double tau_end = std::min(t, src.pulse.window);
  const double u_lo = std::sqrt(t - tau_end);
  const double u_hi = std::sqrt(t);
  const double half_width = truncation_half_width(x, t);
  const double scale = src.absorbed_fraction * beta /
                       (cfg_.substrate.volumetric_heat_capacity() * std::sqrt(std::numbers::pi * alpha_));

  const auto depth_integral = [&](double s) {
    const double width = std::sqrt(4.0 * alpha_ * s);
    std::vector<double> breaks{-half_width, half_width, 0.0, x};
    for (double c = 1.0 / 16.0; c <= 64.0; c *= 2.0) {
      breaks.push_back(c / beta);
      breaks.push_back(-c / beta);
    }
    for (double c : {0.25, 0.5, 1.0, 2.0, 3.0, 4.0, 6.0, 8.0}) {
      breaks.push_back(x - c * width);
      breaks.push_back(x + c * width);
    }
    for (auto& b : breaks) b = std::clamp(b, -half_width, half_width);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    const auto kernel = [&](double xi) {
      const double d = x - xi;
      return std::exp(-beta * std::abs(xi) - d * d / (4.0 * alpha_ * s));
    };
    return rule_.integrate_panels(kernel, breaks);
  };

  const auto integrand = [&](double u) {
    const double tau = t - u * u;
    const double power = intensity(src.pulse, tau);
    if (power == 0.0) return 0.0;
    const double value = power * depth_integral(u * u);
    if (!std::isfinite(value)) throw SolverError(describe_node(x, t, tau));
    return value;
  };
  return scale * rule_.integrate_panels(integrand, time_breaks(t, u_lo, u_hi));
}

double AnalyticalModel::temperature(double x, double t) const {
  if (x < 0.0) throw ValidationError("x", "depth must be non-negative");
  const auto& src = cfg_.source;
  if (!(t > 0.0) || src.beta == 0.0 || src.absorbed_fraction == 0.0 || src.pulse.fluence == 0.0) {
    return cfg_.initial_temperature;
  }
  const double excess =
      cfg_.xi_integration == XiIntegration::kClosedForm ? excess_closed_form(x, t) : excess_quadrature(x, t);
  return cfg_.initial_temperature + excess;
}

TemperatureSeries AnalyticalModel::history(double x, const std::vector<double>& times) const {
  if (!std::is_sorted(times.begin(), times.end())) throw ValidationError("times", "must be ascending");
  TemperatureSeries series;
  series.position = x;
  series.times = times;
  series.temperatures.reserve(times.size());
  for (double t : times) series.temperatures.push_back(temperature(x, t));
  return series;
}

TemperatureSeries surface_history(const AnalyticalModel& model, const std::vector<double>& times) {
  auto series = model.history(0.0, times);
  series.label = "surface";
  return series;
}

}  // namespace lanheat
