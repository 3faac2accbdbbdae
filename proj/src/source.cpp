#include "lanheat/source.hpp"

#include <cmath>
#include <numbers>

#include "lanheat/errors.hpp"

namespace lanheat {

double truncation_normalization() { return 1.0 / std::erf(3.0 / std::numbers::sqrt2); }

LaserPulse make_pulse(WavelengthNm nm, double fluence, double fwhm) {
  if (!(fluence >= 0.0) || !std::isfinite(fluence)) throw ValidationError("fluence", "must be non-negative");
  if (!(fwhm > 0.0) || !std::isfinite(fwhm)) throw ValidationError("fwhm", "must be positive");
  LaserPulse p;
  p.wavelength_nm = nm;
  p.fluence = fluence;
  p.fwhm = fwhm;
  p.sigma = fwhm / (2.0 * std::sqrt(2.0 * std::numbers::ln2));
  p.tau_max = 3.0 * p.sigma;
  p.window = 2.0 * p.tau_max;
  return p;
}

double intensity(const LaserPulse& p, double t) {
  if (t < 0.0 || t > p.window) return 0.0;
  const double z = (t - p.tau_max) / p.sigma;
  const double peak = truncation_normalization() * p.fluence / (std::sqrt(2.0 * std::numbers::pi) * p.sigma);
  return peak * std::exp(-0.5 * z * z);
}

double volumetric_source(const VolumetricSource& s, double x, double t) {
  if (x < 0.0) throw ValidationError("x", "depth must be non-negative");
  return mirrored_source(s, x, t);
}

double mirrored_source(const VolumetricSource& s, double xi, double t) {
  return s.absorbed_fraction * s.beta * std::exp(-s.beta * std::abs(xi)) * intensity(s.pulse, t);
}

double beer_lambert_fraction(double beta, double x0, double x1) {
  // exp(-b x0) - exp(-b x1) without cancellation for thin slabs.
  return -std::exp(-beta * x0) * std::expm1(-beta * (x1 - x0));
}

double deposited_flux(const VolumetricSource& s, double x0, double x1, double t) {
  return s.absorbed_fraction * beer_lambert_fraction(s.beta, x0, x1) * intensity(s.pulse, t);
}

}  // namespace lanheat
