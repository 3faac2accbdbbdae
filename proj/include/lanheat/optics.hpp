#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "lanheat/materials.hpp"

namespace lanheat {

/// One medium of a normal-incidence stack. No thickness means semi-infinite.
struct StackLayer {
  Material material;
  std::optional<double> thickness;  // m
};

/// Ordered media from the incidence side to the exit side. The first and last
/// entries are semi-infinite, every interior entry has a thickness >= 0.
struct LayerStack {
  std::vector<StackLayer> layers;

  /// Throws ValidationError for a malformed geometry.
  void validate() const;
};

struct FresnelCoefficients {
  std::complex<double> t;
  std::complex<double> r;
};

/// Normal-incidence amplitude coefficients for light going from medium a into b.
FresnelCoefficients fresnel_interface(const ComplexIndex& a, const ComplexIndex& b);

/// 2 pi n d / lambda. With n = n' + i kappa a forward wave picks up exp(+i delta)
/// across the layer, so kappa > 0 attenuates it.
std::complex<double> layer_phase(const ComplexIndex& n, double thickness, double wavelength);

struct FieldAmplitudes {
  std::complex<double> forward;
  std::complex<double> backward;
};

/// Field amplitudes in every medium, taken just inside its entrance interface
/// (for the incidence medium: at its exit interface). Normalized so the
/// incident forward amplitude is exactly 1; the exit-medium backward amplitude
/// is exactly 0.
struct FieldSolution {
  WavelengthNm wavelength_nm = 0;
  std::vector<std::complex<double>> index;
  std::vector<FieldAmplitudes> amplitudes;

  /// Net Poynting flux (relative units) carried in medium m at the point the
  /// amplitudes refer to.
  double net_flux(std::size_t m) const;
};

FieldSolution solve_stack(const LayerStack& stack, WavelengthNm nm);

/// Whether the air/mold transmissivity is folded into the reported layer absorbances.
enum class TransmissivityAccounting {
  /// Report absorbances of the mold/resist/substrate stack alone; multiply by
  /// T_a only when converting to deposited energy.
  kSeparate,
  /// Report absorbances already multiplied by T_a.
  kIncluded,
};

struct AbsorbanceOptions {
  ComplexIndex ambient{1.0, 0.0};
  TransmissivityAccounting accounting = TransmissivityAccounting::kSeparate;
};

struct AbsorbanceReport {
  WavelengthNm wavelength_nm = 0;
  std::vector<std::string> layer_names;
  /// Fraction of incident power absorbed in each medium (index 0 is the
  /// incidence medium and is always 0).
  std::vector<double> absorbance;
  double reflectance = 0.0;
  /// Power leaving through a transparent exit medium. Zero for an absorbing exit medium.
  double transmittance = 0.0;
  /// Absorbance of the exit medium: all transmitted power when it absorbs.
  double substrate_absorption = 0.0;
  double air_quartz_transmissivity = 1.0;
  TransmissivityAccounting accounting = TransmissivityAccounting::kSeparate;

  /// Fraction of the laser fluence (before the mold) deposited in layer m.
  double deposited_fraction(std::size_t m) const;
  double deposited_substrate_fraction() const { return deposited_fraction(absorbance.size() - 1); }
};

AbsorbanceReport layer_absorbances(const FieldSolution& sol, const LayerStack& stack,
                                   const AbsorbanceOptions& options = {});

/// 4 n0 nq / (n0 + nq)^2 on the real parts.
double air_quartz_transmissivity(const ComplexIndex& quartz, const ComplexIndex& ambient = {1.0, 0.0});

/// solve_stack followed by layer_absorbances.
AbsorbanceReport analyze_stack(const LayerStack& stack, WavelengthNm nm, const AbsorbanceOptions& options = {});

}  // namespace lanheat
