#pragma once

#include "lanheat/materials.hpp"

namespace lanheat {

/// Gaussian excimer pulse parameterized by fluence. The emission window is
/// [0, window] with the peak at tau_max = 3 sigma and window = 6 sigma.
struct LaserPulse {
  WavelengthNm wavelength_nm = 0;
  double fluence = 0.0;  // J/m^2
  double fwhm = 0.0;     // s
  double sigma = 0.0;    // s
  double tau_max = 0.0;  // s
  double window = 0.0;   // s
};

/// 1 / erf(3 / sqrt 2): compensates the Gaussian tails cut off by the +-3 sigma window.
double truncation_normalization();

/// Throws ValidationError for negative fluence or non-positive FWHM.
LaserPulse make_pulse(WavelengthNm nm, double fluence, double fwhm);

/// Power density in W/m^2; zero outside the emission window.
double intensity(const LaserPulse& p, double t);

/// Beer-Lambert heat source inside the substrate.
struct VolumetricSource {
  double absorbed_fraction = 0.0;  // of the fluence, all optical losses included
  double beta = 0.0;               // 1/m
  LaserPulse pulse;
};

/// W/m^3 at depth x >= 0.
double volumetric_source(const VolumetricSource& s, double x, double t);

/// Even extension of the source to x < 0.
double mirrored_source(const VolumetricSource& s, double xi, double t);

/// Share of the power entering at x = 0 that is absorbed between depths x0 <= x1.
double beer_lambert_fraction(double beta, double x0, double x1);

/// Power per unit area deposited between depths x0 <= x1 (exact integral of the
/// Beer-Lambert profile), W/m^2.
double deposited_flux(const VolumetricSource& s, double x0, double x1, double t);

}  // namespace lanheat
