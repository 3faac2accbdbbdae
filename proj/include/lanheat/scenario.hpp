#pragma once

#include <optional>
#include <string>

#include "lanheat/analytical.hpp"
#include "lanheat/fdm.hpp"
#include "lanheat/materials.hpp"
#include "lanheat/optics.hpp"

namespace lanheat {

/// One laser-assisted imprint configuration: mold | resist | substrate under a
/// single excimer pulse. SI units.
struct LanScenario {
  std::string mold = "FusedSilica";
  std::string resist = "PMMA";
  std::string substrate = "Copper";
  WavelengthNm wavelength_nm = 308;
  double fluence = 6000.0;  // J/m^2
  double fwhm = 20e-9;      // s
  double resist_thickness = 200e-9;
  double initial_temperature = 25.0;  // deg C
  TransmissivityAccounting accounting = TransmissivityAccounting::kSeparate;
};

struct NumericalSettings {
  std::size_t quadrature_order = 104;
  XiIntegration xi_integration = XiIntegration::kClosedForm;
  double dt = 0.1e-9;
  double output_interval = 0.5e-9;
  double min_cell = 5e-9;
  /// Defaults to four pulse windows.
  std::optional<double> end_time;
  OuterBoundary boundary = OuterBoundary::kFixedTemperature;
};

/// Mold (semi-infinite) | resist | substrate (semi-infinite).
LayerStack lan_stack(const MaterialDB& db, const LanScenario& sc);

AbsorbanceReport lan_absorbance(const MaterialDB& db, const LanScenario& sc);

LaserPulse lan_pulse(const LanScenario& sc);

double default_end_time(const LaserPulse& pulse);

AnalyticalConfig analytical_config(const MaterialDB& db, const LanScenario& sc, const AbsorbanceReport& optics,
                                   const NumericalSettings& num = {});

FdmConfig fdm_config(const MaterialDB& db, const LanScenario& sc, const AbsorbanceReport& optics,
                     const NumericalSettings& num = {});

/// Sample times 0, dt_out, 2 dt_out, ... up to end_time inclusive.
std::vector<double> output_times(double end_time, double interval);

}  // namespace lanheat
