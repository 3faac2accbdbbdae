#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lanheat/cli/run_config.hpp"
#include "lanheat/optics.hpp"
#include "lanheat/series.hpp"

namespace lanheat::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitSolver = 2,
  kExitThreshold = 3,
};

struct SeriesResult {
  SolverKind solver = SolverKind::kFdm;  // kAnalytical or kFdm
  Probe probe;
  TemperatureSeries series;
};

/// Everything computed for one point of the parameter space.
struct PointResult {
  LanScenario scenario;
  AbsorbanceReport optics;
  std::vector<SeriesResult> series;

  /// Throws NotFoundError when the combination was not computed.
  const SeriesResult& find(SolverKind solver, const Probe& probe) const;
};

/// Runs the configured solver(s) for every probe at one scenario. The
/// analytical model has no resist, so a resist-centre probe is skipped for it
/// unless the user named that probe explicitly with solver=analytical, which
/// is a validation error.
PointResult simulate_point(const MaterialDB& db, const RunConfig& cfg, const LanScenario& sc);

struct ComparisonMetrics {
  double analytical_peak_c = 0.0;
  double fdm_peak_c = 0.0;
  /// |peak difference| as a percentage of the analytical peak rise.
  double peak_diff_pct = 0.0;
  double rms_diff_k = 0.0;
  double peak_time_diff_ns = 0.0;
};

/// Series must share their time axis.
ComparisonMetrics compare_series(const TemperatureSeries& analytical, const TemperatureSeries& fdm,
                                 double initial_temperature);

int cmd_absorbance(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_materials_list(const RunConfig& cfg, bool canonical, std::ostream& out, std::ostream& err);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lanheat::cli
