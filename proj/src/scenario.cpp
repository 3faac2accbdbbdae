#include "lanheat/scenario.hpp"

#include <cmath>

#include "lanheat/errors.hpp"

namespace lanheat {

LayerStack lan_stack(const MaterialDB& db, const LanScenario& sc) {
  if (!(sc.resist_thickness > 0.0)) throw ValidationError("resist_thickness", "must be positive");
  return LayerStack{{{db.at(sc.mold), std::nullopt},
                     {db.at(sc.resist), sc.resist_thickness},
                     {db.at(sc.substrate), std::nullopt}}};
}

AbsorbanceReport lan_absorbance(const MaterialDB& db, const LanScenario& sc) {
  return analyze_stack(lan_stack(db, sc), sc.wavelength_nm, AbsorbanceOptions{{1.0, 0.0}, sc.accounting});
}

LaserPulse lan_pulse(const LanScenario& sc) { return make_pulse(sc.wavelength_nm, sc.fluence, sc.fwhm); }

double default_end_time(const LaserPulse& pulse) { return 4.0 * pulse.window; }

AnalyticalConfig analytical_config(const MaterialDB& db, const LanScenario& sc, const AbsorbanceReport& optics,
                                   const NumericalSettings& num) {
  const Material& substrate = db.at(sc.substrate);
  AnalyticalConfig cfg;
  cfg.substrate = substrate;
  cfg.source = VolumetricSource{optics.deposited_substrate_fraction(),
                                absorption_coefficient(substrate, sc.wavelength_nm), lan_pulse(sc)};
  cfg.initial_temperature = sc.initial_temperature;
  cfg.quadrature_order = num.quadrature_order;
  cfg.xi_integration = num.xi_integration;
  return cfg;
}

FdmConfig fdm_config(const MaterialDB& db, const LanScenario& sc, const AbsorbanceReport& optics,
                     const NumericalSettings& num) {
  FdmConfig cfg;
  cfg.geometry.polymer_thickness = sc.resist_thickness;
  cfg.geometry.min_cell = num.min_cell;
  cfg.quartz = db.at(sc.mold);
  cfg.polymer = db.at(sc.resist);
  cfg.substrate = db.at(sc.substrate);
  cfg.pulse = lan_pulse(sc);
  cfg.polymer_fraction = optics.deposited_fraction(1);
  cfg.substrate_fraction = optics.deposited_substrate_fraction();
  cfg.substrate_beta = absorption_coefficient(cfg.substrate, sc.wavelength_nm);
  cfg.initial_temperature = sc.initial_temperature;
  cfg.dt = num.dt;
  cfg.output_interval = num.output_interval;
  cfg.end_time = num.end_time.value_or(default_end_time(cfg.pulse));
  cfg.boundary = num.boundary;
  return cfg;
}

std::vector<double> output_times(double end_time, double interval) {
  if (!(interval > 0.0)) throw ValidationError("output_interval", "must be positive");
  std::vector<double> times;
  const auto count = static_cast<std::size_t>(std::floor(end_time / interval + 1e-9));
  for (std::size_t k = 0; k <= count; ++k) times.push_back(static_cast<double>(k) * interval);
  return times;
}

}  // namespace lanheat
