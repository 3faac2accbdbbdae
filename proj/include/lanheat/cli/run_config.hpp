#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lanheat/materials.hpp"
#include "lanheat/optics.hpp"
#include "lanheat/scenario.hpp"

namespace lanheat::cli {

// Unit conversions live at the command-line boundary only.
inline constexpr double kJoulePerCm2 = 1e4;  // J/m^2
inline constexpr double kNanosecond = 1e-9;
inline constexpr double kMicrometer = 1e-6;
inline constexpr double kNanometer = 1e-9;

enum class SolverKind { kAnalytical, kFdm, kBoth };

SolverKind parse_solver(const std::string& text);
std::string to_string(SolverKind s);

/// A temperature probe: a depth below the substrate surface or the resist centre.
struct Probe {
  enum class Kind { kDepth, kResistCenter };
  Kind kind = Kind::kDepth;
  double depth_um = 0.0;

  /// "surface", "depth_5um" or "polymer-center".
  std::string label() const;
  friend bool operator==(const Probe&, const Probe&) = default;
};

/// Accepts a depth in micrometres or the token `polymer-center`.
Probe parse_probe(const std::string& text);
std::vector<Probe> default_probes();

/// Fully resolved options of one command invocation. The list-valued axes hold
/// a single entry except in sweeps.
struct RunConfig {
  std::vector<std::string> substrates{"Copper"};
  std::vector<WavelengthNm> wavelengths_nm{308};
  std::vector<double> fluences_j_cm2{0.6};
  std::vector<double> fwhms_ns{20.0};
  std::string mold = "FusedSilica";
  std::string resist = "PMMA";
  double resist_nm = 200.0;
  SolverKind solver = SolverKind::kBoth;
  std::vector<Probe> probes = default_probes();
  bool probes_from_user = false;
  std::string out;
  std::string svg;
  std::string materials_file;
  double ti_c = 25.0;
  std::size_t quad_order = 104;
  double dt_ns = 0.1;
  double output_ns = 0.5;
  double min_cell_nm = 5.0;
  std::optional<double> end_ns;
  double threshold_pct = 5.0;
  TransmissivityAccounting accounting = TransmissivityAccounting::kSeparate;
  std::size_t workers = 0;  // 0: hardware concurrency
  std::size_t max_points = 10000;

  /// Throws ValidationError.
  void validate(bool require_single_point) const;

  /// Scenario for one point of the axes.
  LanScenario scenario(const std::string& substrate, WavelengthNm nm, double fluence_j_cm2, double fwhm_ns) const;
  /// Scenario for the first entry of every axis.
  LanScenario scenario() const;
  NumericalSettings numerics() const;
  MaterialDB materials() const;

  /// `key = value` lines describing every resolved option, for CSV headers.
  std::vector<std::string> describe() const;
};

/// Applies the `[run]` section of a structured-text config file on top of `cfg`.
void apply_config_file(RunConfig& cfg, const std::string& path);
void apply_config_text(RunConfig& cfg, const std::string& text);

}  // namespace lanheat::cli
