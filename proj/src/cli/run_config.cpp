#include "lanheat/cli/run_config.hpp"

#include <cmath>
#include <sstream>

#include "lanheat/errors.hpp"
#include "lanheat/keyvalue.hpp"

namespace lanheat::cli {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

template <class T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ",";
    if constexpr (std::is_same_v<T, std::string>) {
      out += v;
    } else {
      out += format_number(static_cast<double>(v));
    }
  }
  return out;
}

std::vector<double> numbers_of(const KvEntry& e) {
  if (const auto* v = std::get_if<double>(&e.value)) return {*v};
  if (const auto* v = std::get_if<std::vector<double>>(&e.value)) return *v;
  throw ValidationError(e.key, "expected a number or an array of numbers");
}

double number_of(const KvEntry& e) {
  const auto v = numbers_of(e);
  if (v.size() != 1) throw ValidationError(e.key, "expected a single number");
  return v.front();
}

std::string string_of(const KvEntry& e) {
  if (const auto* v = std::get_if<std::string>(&e.value)) return *v;
  throw ValidationError(e.key, "expected a quoted string");
}

std::size_t count_of(const KvEntry& e) {
  const double v = number_of(e);
  if (!(v >= 0.0) || v != std::floor(v)) throw ValidationError(e.key, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

SolverKind parse_solver(const std::string& text) {
  if (text == "analytical") return SolverKind::kAnalytical;
  if (text == "fdm") return SolverKind::kFdm;
  if (text == "both") return SolverKind::kBoth;
  throw ValidationError("solver", "expected analytical, fdm or both, got '" + text + "'");
}

std::string to_string(SolverKind s) {
  switch (s) {
    case SolverKind::kAnalytical: return "analytical";
    case SolverKind::kFdm: return "fdm";
    case SolverKind::kBoth: break;
  }
  return "both";
}

std::string Probe::label() const {
  if (kind == Kind::kResistCenter) return "polymer-center";
  if (depth_um == 0.0) return "surface";
  return "depth_" + format_number(depth_um) + "um";
}

Probe parse_probe(const std::string& text) {
  if (text == "polymer-center") return {Probe::Kind::kResistCenter, 0.0};
  if (text == "surface") return {Probe::Kind::kDepth, 0.0};
  std::size_t used = 0;
  double depth = 0.0;
  try {
    depth = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw ValidationError("probe", "expected a depth in um or 'polymer-center', got '" + text + "'");
  }
  if (!(depth >= 0.0)) throw ValidationError("probe", "depth must be non-negative");
  return {Probe::Kind::kDepth, depth};
}

std::vector<Probe> default_probes() {
  return {{Probe::Kind::kDepth, 0.0},
          {Probe::Kind::kDepth, 1.0},
          {Probe::Kind::kDepth, 2.0},
          {Probe::Kind::kDepth, 5.0},
          {Probe::Kind::kResistCenter, 0.0}};
}

void RunConfig::validate(bool require_single_point) const {
  if (substrates.empty()) throw ValidationError("substrate", "at least one value required");
  if (wavelengths_nm.empty()) throw ValidationError("wavelength-nm", "at least one value required");
  if (fluences_j_cm2.empty()) throw ValidationError("fluence-j-cm2", "at least one value required");
  if (fwhms_ns.empty()) throw ValidationError("fwhm-ns", "at least one value required");
  if (require_single_point && (substrates.size() > 1 || wavelengths_nm.size() > 1 || fluences_j_cm2.size() > 1 ||
                               fwhms_ns.size() > 1)) {
    throw ValidationError("axes", "this command takes a single value per axis; use 'sweep' for lists");
  }
  for (double f : fluences_j_cm2) {
    if (!(f >= 0.0) || !std::isfinite(f)) throw ValidationError("fluence-j-cm2", "must be non-negative");
  }
  for (double w : fwhms_ns) {
    if (!(w > 0.0) || !std::isfinite(w)) throw ValidationError("fwhm-ns", "must be positive");
  }
  for (int nm : wavelengths_nm) {
    if (nm <= 0) throw ValidationError("wavelength-nm", "must be positive");
  }
  if (!(resist_nm > 0.0)) throw ValidationError("resist-nm", "must be positive");
  if (quad_order < 2) throw ValidationError("quad-order", "must be at least 2");
  if (!(dt_ns > 0.0)) throw ValidationError("dt-ns", "must be positive");
  if (!(output_ns > 0.0)) throw ValidationError("output-ns", "must be positive");
  if (!(min_cell_nm > 0.0)) throw ValidationError("min-cell-nm", "must be positive");
  if (end_ns && !(*end_ns > 0.0)) throw ValidationError("end-ns", "must be positive");
  if (!(threshold_pct >= 0.0)) throw ValidationError("threshold-pct", "must be non-negative");
  if (probes.empty()) throw ValidationError("probe", "at least one probe required");
  if (max_points == 0) throw ValidationError("max-points", "must be positive");
}

LanScenario RunConfig::scenario(const std::string& substrate, WavelengthNm nm, double fluence_j_cm2,
                                double fwhm_ns) const {
  LanScenario sc;
  sc.mold = mold;
  sc.resist = resist;
  sc.substrate = substrate;
  sc.wavelength_nm = nm;
  sc.fluence = fluence_j_cm2 * kJoulePerCm2;
  sc.fwhm = fwhm_ns * kNanosecond;
  sc.resist_thickness = resist_nm * kNanometer;
  sc.initial_temperature = ti_c;
  sc.accounting = accounting;
  return sc;
}

LanScenario RunConfig::scenario() const {
  return scenario(substrates.front(), wavelengths_nm.front(), fluences_j_cm2.front(), fwhms_ns.front());
}

NumericalSettings RunConfig::numerics() const {
  NumericalSettings num;
  num.quadrature_order = quad_order;
  num.dt = dt_ns * kNanosecond;
  num.output_interval = output_ns * kNanosecond;
  num.min_cell = min_cell_nm * kNanometer;
  if (end_ns) num.end_time = *end_ns * kNanosecond;
  return num;
}

MaterialDB RunConfig::materials() const {
  return materials_file.empty() ? MaterialDB::builtin() : load_materials_file(materials_file);
}

std::vector<std::string> RunConfig::describe() const {
  std::vector<std::string> probe_labels;
  for (const auto& p : probes) probe_labels.push_back(p.label());
  return {
      "substrate = " + join(substrates),
      "wavelength_nm = " + join(wavelengths_nm),
      "fluence_j_cm2 = " + join(fluences_j_cm2),
      "fwhm_ns = " + join(fwhms_ns),
      "mold = " + mold,
      "resist = " + resist,
      "resist_nm = " + format_number(resist_nm),
      "solver = " + to_string(solver),
      "probes = " + join(probe_labels),
      "materials_file = " + (materials_file.empty() ? std::string("(built-in)") : materials_file),
      "ti_c = " + format_number(ti_c),
      "quad_order = " + std::to_string(quad_order),
      "dt_ns = " + format_number(dt_ns),
      "output_ns = " + format_number(output_ns),
      "min_cell_nm = " + format_number(min_cell_nm),
      "end_ns = " + (end_ns ? format_number(*end_ns) : std::string("auto (4 pulse windows)")),
      "threshold_pct = " + format_number(threshold_pct),
      std::string("accounting = ") +
          (accounting == TransmissivityAccounting::kSeparate ? "separate" : "included"),
  };
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
  const KvDocument doc = parse_kv(text);
  const KvSection* run = doc.find("run");
  if (run == nullptr) throw ValidationError("config", "missing [run] section");
  for (const auto& e : run->entries) {
    const std::string& k = e.key;
    if (k == "substrate") {
      cfg.substrates = split_list(string_of(e));
    } else if (k == "wavelength_nm") {
      cfg.wavelengths_nm.clear();
      for (double v : numbers_of(e)) {
        if (v != std::floor(v)) throw ValidationError(k, "wavelengths are integer nm");
        cfg.wavelengths_nm.push_back(static_cast<WavelengthNm>(v));
      }
    } else if (k == "fluence_j_cm2") {
      cfg.fluences_j_cm2 = numbers_of(e);
    } else if (k == "fwhm_ns") {
      cfg.fwhms_ns = numbers_of(e);
    } else if (k == "mold") {
      cfg.mold = string_of(e);
    } else if (k == "resist") {
      cfg.resist = string_of(e);
    } else if (k == "resist_nm") {
      cfg.resist_nm = number_of(e);
    } else if (k == "solver") {
      cfg.solver = parse_solver(string_of(e));
    } else if (k == "probes") {
      cfg.probes.clear();
      cfg.probes_from_user = true;
      for (const auto& p : split_list(string_of(e))) cfg.probes.push_back(parse_probe(p));
    } else if (k == "out") {
      cfg.out = string_of(e);
    } else if (k == "svg") {
      cfg.svg = string_of(e);
    } else if (k == "materials_file") {
      cfg.materials_file = string_of(e);
    } else if (k == "ti_c") {
      cfg.ti_c = number_of(e);
    } else if (k == "quad_order") {
      cfg.quad_order = count_of(e);
    } else if (k == "dt_ns") {
      cfg.dt_ns = number_of(e);
    } else if (k == "output_ns") {
      cfg.output_ns = number_of(e);
    } else if (k == "min_cell_nm") {
      cfg.min_cell_nm = number_of(e);
    } else if (k == "end_ns") {
      cfg.end_ns = number_of(e);
    } else if (k == "threshold_pct") {
      cfg.threshold_pct = number_of(e);
    } else if (k == "accounting") {
      const auto v = string_of(e);
      if (v == "separate") cfg.accounting = TransmissivityAccounting::kSeparate;
      else if (v == "included") cfg.accounting = TransmissivityAccounting::kIncluded;
      else throw ValidationError(k, "expected separate or included");
    } else if (k == "workers") {
      cfg.workers = count_of(e);
    } else if (k == "max_points") {
      cfg.max_points = count_of(e);
    } else {
      throw ValidationError(k, "unknown config key (line " + std::to_string(e.line) + ")");
    }
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) { apply_config_text(cfg, read_text_file(path)); }

}  // namespace lanheat::cli
