#pragma once

#include <cstddef>
#include <vector>

#include "lanheat/materials.hpp"
#include "lanheat/series.hpp"
#include "lanheat/source.hpp"

namespace lanheat {

/// Layer extents of the mold / resist / substrate conduction problem and the
/// mesh controls. Lengths in m.
struct FdmGeometry {
  double quartz_thickness = 200e-6;
  double polymer_thickness = 200e-9;
  double substrate_thickness = 200e-6;
  double min_cell = 5e-9;
  /// Uniform fine cells extend this far into quartz and substrate from the resist.
  double fine_extent = 2e-6;
  double max_stretch = 1.2;
};

enum class Region { kQuartz = 0, kPolymer = 1, kSubstrate = 2 };

/// Cell-centred 1D mesh. x = 0 is the resist/substrate interface; the mold
/// and resist occupy x < 0 and the substrate x > 0.
struct Grid1D {
  std::vector<double> centers;
  std::vector<double> widths;
  std::vector<double> faces;  // size() + 1 entries; the resist/substrate face is exactly 0
  std::vector<Region> regions;
  double left = 0.0;   // outer face of the mold
  double right = 0.0;  // outer face of the substrate
  std::size_t polymer_begin = 0;
  std::size_t substrate_begin = 0;

  std::size_t size() const { return centers.size(); }
  /// Left face of cell i.
  double face(std::size_t i) const { return faces[i]; }
  /// Cell containing x. A point on a face belongs to the deeper cell, so x = 0
  /// selects the first substrate cell. Throws ValidationError outside [left, right].
  std::size_t cell_containing(double x) const;
};

enum class OuterBoundary {
  /// Far faces held at the initial temperature.
  kFixedTemperature,
  kAdiabatic,
};

struct FdmConfig {
  FdmGeometry geometry;
  Material quartz;
  Material polymer;
  Material substrate;
  LaserPulse pulse;
  /// Fractions of the fluence deposited in the resist (uniformly) and in the
  /// substrate (Beer-Lambert with `substrate_beta`).
  double polymer_fraction = 0.0;
  double substrate_fraction = 0.0;
  double substrate_beta = 0.0;  // 1/m
  double initial_temperature = 25.0;
  double dt = 0.1e-9;
  double end_time = 0.0;
  double output_interval = 0.5e-9;
  OuterBoundary boundary = OuterBoundary::kFixedTemperature;

  /// Throws ValidationError.
  void validate() const;
};

struct FdmState {
  double time = 0.0;
  std::vector<double> temperatures;  // deg C, one per cell
};

/// Temperature snapshots on the grid. `values[k * grid.size() + i]` is cell i at times[k].
struct TemperatureField {
  Grid1D grid;
  std::vector<double> times;
  std::vector<double> values;
  double initial_temperature = 25.0;
  /// Energy per unit area put in by the source over the whole run, J/m^2.
  double deposited_energy = 0.0;
  /// Sum of rho C dx (T - T_i) at the last snapshot, J/m^2.
  double final_enthalpy = 0.0;

  double at(std::size_t time_index, std::size_t cell) const { return values[time_index * grid.size() + cell]; }
};

/// Uniform cells of `min_cell` through the resist and the fine zones, then
/// geometric stretching towards both outer faces.
Grid1D build_grid(const FdmGeometry& geometry);
inline Grid1D build_grid(const FdmConfig& cfg) { return build_grid(cfg.geometry); }

/// Backward-Euler control-volume discretization with harmonic-mean face
/// conductances, solved with the Thomas algorithm.
class ImplicitConductionSolver {
 public:
  ImplicitConductionSolver(const FdmConfig& cfg, Grid1D grid);

  const Grid1D& grid() const { return grid_; }
  FdmState initial_state() const;

  /// Advances one time step of the configured size.
  FdmState step(const FdmState& state) const;

  /// Source power per unit area absorbed in cell i at time t, W/m^2.
  double cell_source(std::size_t i, double t) const;

  /// Sum of rho C dx (T - T_i), J/m^2.
  double enthalpy(const FdmState& state) const;

 private:
  FdmConfig cfg_;
  Grid1D grid_;
  std::vector<double> capacity_;  // rho C dx
  std::vector<double> lower_, diag_, upper_;
  std::vector<double> deposit_;   // fraction of I(t) absorbed per cell
};

FdmState step(const FdmState& state, const FdmConfig& cfg, const Grid1D& grid);

TemperatureField run(const FdmConfig& cfg);

/// Time series of the cell containing x (no interpolation).
TemperatureSeries probe(const TemperatureField& field, double x);

}  // namespace lanheat
