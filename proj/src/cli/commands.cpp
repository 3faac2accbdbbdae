#include "lanheat/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <thread>

#include "lanheat/analytical.hpp"
#include "lanheat/cli/csv.hpp"
#include "lanheat/cli/svg.hpp"
#include "lanheat/errors.hpp"
#include "lanheat/fdm.hpp"
#include "lanheat/keyvalue.hpp"
#include "lanheat/scenario.hpp"

namespace lanheat::cli {

namespace {

constexpr const char* kVersion = "lanheat 1.0";

bool wants(SolverKind configured, SolverKind solver) {
  return configured == SolverKind::kBoth || configured == solver;
}

double probe_position(const Probe& p, const LanScenario& sc) {
  return p.kind == Probe::Kind::kResistCenter ? -0.5 * sc.resist_thickness : p.depth_um * kMicrometer;
}

std::string accounting_name(TransmissivityAccounting a) {
  return a == TransmissivityAccounting::kSeparate ? "separate" : "included";
}

std::string pct(double fraction) { return fixed(100.0 * fraction, 2); }

std::vector<std::string> audit_header(const std::string& command, const RunConfig& cfg) {
  std::vector<std::string> lines{std::string(kVersion) + " " + command};
  for (const auto& l : cfg.describe()) lines.push_back(l);
  return lines;
}

std::string optics_summary(const AbsorbanceReport& r) {
  std::ostringstream s;
  s << "R=" << fixed(r.reflectance, 4) << " T_a=" << fixed(r.air_quartz_transmissivity, 4);
  for (std::size_t m = 1; m < r.absorbance.size(); ++m) {
    s << " A_" << r.layer_names[m] << "=" << fixed(r.absorbance[m], 4);
  }
  s << " deposited_substrate=" << fixed(r.deposited_substrate_fraction(), 4);
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

PlotLine plot_line(const SeriesResult& r) {
  PlotLine line{to_string(r.solver) + " " + r.probe.label(), {}, r.series.temperatures};
  for (double t : r.series.times) line.x.push_back(t / kNanosecond);
  return line;
}

}  // namespace

const SeriesResult& PointResult::find(SolverKind solver, const Probe& probe) const {
  for (const auto& s : series) {
    if (s.solver == solver && s.probe == probe) return s;
  }
  throw NotFoundError("no " + to_string(solver) + " series for probe " + probe.label());
}

PointResult simulate_point(const MaterialDB& db, const RunConfig& cfg, const LanScenario& sc) {
  PointResult result;
  result.scenario = sc;
  result.optics = lan_absorbance(db, sc);
  const NumericalSettings num = cfg.numerics();
  const LaserPulse pulse = lan_pulse(sc);
  const double end_time = num.end_time.value_or(default_end_time(pulse));
  if (end_time < pulse.window) throw ValidationError("end-ns", "must cover the pulse window");

  if (cfg.solver == SolverKind::kAnalytical && cfg.probes_from_user) {
    for (const auto& p : cfg.probes) {
      if (p.kind == Probe::Kind::kResistCenter) {
        throw ValidationError("probe", "the analytical model has no resist layer; polymer-center needs fdm");
      }
    }
  }

  // The analytical model is sampled on the FDM output times when both run.
  std::vector<double> times = output_times(end_time, num.output_interval);
  if (wants(cfg.solver, SolverKind::kFdm)) {
    FdmConfig fcfg = fdm_config(db, sc, result.optics, num);
    fcfg.end_time = end_time;
    const TemperatureField field = run(fcfg);
    times = field.times;
    for (const auto& p : cfg.probes) {
      auto series = probe(field, probe_position(p, sc));
      series.label = p.label();
      result.series.push_back({SolverKind::kFdm, p, std::move(series)});
    }
  }
  if (wants(cfg.solver, SolverKind::kAnalytical)) {
    const AnalyticalModel model(analytical_config(db, sc, result.optics, num));
    for (const auto& p : cfg.probes) {
      if (p.kind == Probe::Kind::kResistCenter) continue;
      auto series = model.history(probe_position(p, sc), times);
      series.label = p.label();
      result.series.push_back({SolverKind::kAnalytical, p, std::move(series)});
    }
  }
  return result;
}

ComparisonMetrics compare_series(const TemperatureSeries& analytical, const TemperatureSeries& fdm,
                                 double initial_temperature) {
  const std::size_t n = analytical.temperatures.size();
  if (n == 0 || n != fdm.temperatures.size()) throw ValidationError("series", "series must share a time axis");
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(analytical.times[k] - fdm.times[k]) > 1e-6 * std::max(1e-12, std::abs(analytical.times[k]))) {
      throw ValidationError("series", "time axes differ");
    }
  }
  ComparisonMetrics m;
  const auto pa = analytical.peak();
  const auto pf = fdm.peak();
  m.analytical_peak_c = pa.temperature;
  m.fdm_peak_c = pf.temperature;
  const double rise = pa.temperature - initial_temperature;
  const double diff = std::abs(pa.temperature - pf.temperature);
  if (diff == 0.0) {
    m.peak_diff_pct = 0.0;
  } else {
    m.peak_diff_pct = rise > 0.0 ? 100.0 * diff / rise : std::numeric_limits<double>::infinity();
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double d = analytical.temperatures[k] - fdm.temperatures[k];
    sum += d * d;
  }
  m.rms_diff_k = std::sqrt(sum / static_cast<double>(n));
  m.peak_time_diff_ns = (pf.time - pa.time) / kNanosecond;
  return m;
}

int cmd_absorbance(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate(false);
  const MaterialDB db = cfg.materials();
  CsvTable table({"substrate", "wavelength_nm", "mold", "resist", "resist_nm", "R", "T", "T_a", "A_resist",
                  "A_substrate", "deposited_substrate", "accounting"});
  table.comments(audit_header("absorbance", cfg));

  out << std::left << std::setw(12) << "substrate" << std::setw(8) << "nm" << std::setw(10) << "R"
      << std::setw(10) << "T_a" << std::setw(12) << "A_resist" << std::setw(14) << "A_substrate"
      << "deposited\n";
  for (const auto& substrate : cfg.substrates) {
    for (WavelengthNm nm : cfg.wavelengths_nm) {
      const LanScenario sc = cfg.scenario(substrate, nm, cfg.fluences_j_cm2.front(), cfg.fwhms_ns.front());
      const AbsorbanceReport r = lan_absorbance(db, sc);
      if (db.at(substrate).index_at(nm).kappa == 0.0) {
        err << "warning: substrate '" << substrate << "' is transparent at " << nm
            << " nm; substrate absorbance reported as 0\n";
      }
      out << std::left << std::setw(12) << substrate << std::setw(8) << nm << std::setw(10)
          << pct(r.reflectance) + "%" << std::setw(10) << pct(r.air_quartz_transmissivity) + "%" << std::setw(12)
          << pct(r.absorbance[1]) + "%" << std::setw(14) << pct(r.substrate_absorption) + "%"
          << pct(r.deposited_substrate_fraction()) + "%\n";
      table.row({substrate, std::to_string(nm), cfg.mold, cfg.resist, format_number(cfg.resist_nm),
                 fixed(r.reflectance, 6), fixed(r.transmittance, 6), fixed(r.air_quartz_transmissivity, 6),
                 fixed(r.absorbance[1], 6), fixed(r.substrate_absorption, 6),
                 fixed(r.deposited_substrate_fraction(), 6), accounting_name(r.accounting)});
    }
  }
  if (!cfg.out.empty()) table.write(cfg.out);
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  cfg.validate(true);
  const MaterialDB db = cfg.materials();
  const LanScenario sc = cfg.scenario();
  const PointResult result = simulate_point(db, cfg, sc);

  const std::filesystem::path dir = cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
  std::filesystem::create_directories(dir);

  PlotSpec plot{"Temperature history: " + sc.substrate + ", " + std::to_string(sc.wavelength_nm) + " nm, " +
                    format_number(cfg.fluences_j_cm2.front()) + " J/cm^2, " + format_number(cfg.fwhms_ns.front()) +
                    " ns FWHM",
                "time (ns)", "temperature (C)", {}};
  for (const auto& r : result.series) {
    CsvTable table({"t_ns", "T_C"});
    table.comments(audit_header("simulate", cfg));
    table.comment("series = " + to_string(r.solver) + " " + r.probe.label());
    table.comment("position_um = " + fixed(r.series.position / kMicrometer, 6));
    table.comment("optics: " + optics_summary(result.optics));
    for (std::size_t k = 0; k < r.series.times.size(); ++k) {
      table.row({fixed(r.series.times[k] / kNanosecond, 4), fixed(r.series.temperatures[k], 6)});
    }
    table.write((dir / (to_string(r.solver) + "_" + r.probe.label() + ".csv")).string());

    const auto peak = r.series.peak();
    out << "solver=" << to_string(r.solver) << " probe=" << r.probe.label() << " peak_T_C=" << fixed(peak.temperature, 2)
        << " t_peak_ns=" << fixed(peak.time / kNanosecond, 2) << " " << optics_summary(result.optics) << "\n";
    plot.lines.push_back(plot_line(r));
  }
  if (!cfg.svg.empty()) write_text(cfg.svg, render_svg(plot));
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate(false);
  const MaterialDB db = cfg.materials();

  std::vector<LanScenario> points;
  std::vector<std::array<std::string, 4>> keys;
  const std::size_t total =
      cfg.substrates.size() * cfg.wavelengths_nm.size() * cfg.fluences_j_cm2.size() * cfg.fwhms_ns.size();
  if (total > cfg.max_points) {
    throw ValidationError("sweep", std::to_string(total) + " points exceed the cap of " +
                                       std::to_string(cfg.max_points) + " (raise --max-points)");
  }
  for (const auto& s : cfg.substrates) {
    for (WavelengthNm nm : cfg.wavelengths_nm) {
      for (double f : cfg.fluences_j_cm2) {
        for (double w : cfg.fwhms_ns) {
          points.push_back(cfg.scenario(s, nm, f, w));
          keys.push_back({s, std::to_string(nm), format_number(f), format_number(w)});
        }
      }
    }
  }

  std::vector<PointResult> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::min(points.size(), cfg.workers > 0 ? cfg.workers : std::max(1u, std::thread::hardware_concurrency()));
  const auto work = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        results[i] = simulate_point(db, cfg, points[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  CsvTable table({"substrate", "wavelength_nm", "fluence_j_cm2", "fwhm_ns", "solver", "probe", "metric", "value"});
  table.comments(audit_header("sweep", cfg));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& k = keys[i];
    const auto& r = results[i];
    const auto add = [&](const std::string& solver, const std::string& probe, const std::string& metric,
                         const std::string& value) { table.row({k[0], k[1], k[2], k[3], solver, probe, metric, value}); };
    add("optics", "stack", "substrate_absorbance", fixed(r.optics.substrate_absorption, 6));
    add("optics", "stack", "resist_absorbance", fixed(r.optics.absorbance[1], 6));
    add("optics", "stack", "deposited_substrate_fraction", fixed(r.optics.deposited_substrate_fraction(), 6));
    for (const auto& s : r.series) {
      const auto peak = s.series.peak();
      add(to_string(s.solver), s.probe.label(), "peak_T_C", fixed(peak.temperature, 6));
      add(to_string(s.solver), s.probe.label(), "t_peak_ns", fixed(peak.time / kNanosecond, 4));
    }
  }
  if (cfg.out.empty()) {
    out << table.str();
  } else {
    table.write(cfg.out);
    err << "wrote " << table.rows() << " rows for " << points.size() << " sweep points to " << cfg.out << "\n";
  }
  return kExitOk;
}

int cmd_compare(const RunConfig& cfg_in, std::ostream& out, std::ostream&) {
  RunConfig cfg = cfg_in;
  cfg.solver = SolverKind::kBoth;
  cfg.probes = {Probe{Probe::Kind::kDepth, 0.0}};
  cfg.validate(true);
  const MaterialDB db = cfg.materials();
  const LanScenario sc = cfg.scenario();
  const PointResult result = simulate_point(db, cfg, sc);
  const auto& a = result.find(SolverKind::kAnalytical, cfg.probes.front()).series;
  const auto& f = result.find(SolverKind::kFdm, cfg.probes.front()).series;
  const ComparisonMetrics m = compare_series(a, f, sc.initial_temperature);
  const bool pass = m.peak_diff_pct < cfg.threshold_pct;

  CsvTable table({"t_ns", "T_analytical_C", "T_fdm_C", "diff_K"});
  table.comments(audit_header("compare", cfg));
  table.comment("optics: " + optics_summary(result.optics));
  table.comment("analytical_peak_C = " + fixed(m.analytical_peak_c, 4));
  table.comment("fdm_peak_C = " + fixed(m.fdm_peak_c, 4));
  table.comment("peak_diff_pct = " + fixed(m.peak_diff_pct, 4));
  table.comment("rms_diff_K = " + fixed(m.rms_diff_k, 4));
  table.comment("peak_time_diff_ns = " + fixed(m.peak_time_diff_ns, 4));
  table.comment(std::string("verdict = ") + (pass ? "pass" : "fail") + " (threshold " +
                format_number(cfg.threshold_pct) + " %)");
  for (std::size_t k = 0; k < a.times.size(); ++k) {
    table.row({fixed(a.times[k] / kNanosecond, 4), fixed(a.temperatures[k], 6), fixed(f.temperatures[k], 6),
               fixed(f.temperatures[k] - a.temperatures[k], 6)});
  }
  table.write(cfg.out.empty() ? "compare.csv" : cfg.out);
  if (!cfg.svg.empty()) {
    PlotSpec plot{"Analytical vs FDM surface temperature", "time (ns)", "temperature (C)",
                   {plot_line(result.find(SolverKind::kAnalytical, cfg.probes.front())),
                    plot_line(result.find(SolverKind::kFdm, cfg.probes.front()))}};
    write_text(cfg.svg, render_svg(plot));
  }

  out << "analytical_peak_C=" << fixed(m.analytical_peak_c, 2) << " fdm_peak_C=" << fixed(m.fdm_peak_c, 2)
      << " peak_diff_pct=" << fixed(m.peak_diff_pct, 3) << " rms_diff_K=" << fixed(m.rms_diff_k, 3)
      << " peak_time_diff_ns=" << fixed(m.peak_time_diff_ns, 2) << " verdict=" << (pass ? "pass" : "fail") << "\n";
  return pass ? kExitOk : kExitThreshold;
}

int cmd_materials_list(const RunConfig& cfg, bool canonical, std::ostream& out, std::ostream&) {
  const MaterialDB db = cfg.materials();
  if (canonical) {
    out << save_materials(db);
    return kExitOk;
  }
  out << std::left << std::setw(14) << "name" << std::setw(12) << "rho" << std::setw(12) << "C" << std::setw(10)
      << "k" << std::setw(14) << "alpha_m2_s" << "wavelengths_nm (n, kappa, beta_1/nm)\n";
  for (const auto& [name, m] : db) {
    std::ostringstream alpha;
    alpha << std::scientific << std::setprecision(4) << thermal_diffusivity(m);
    out << std::left << std::setw(14) << name << std::setw(12) << format_number(m.density) << std::setw(12)
        << format_number(m.heat_capacity) << std::setw(10) << format_number(m.thermal_conductivity) << std::setw(14)
        << alpha.str();
    bool first = true;
    for (const auto& [nm, idx] : m.refractive_index) {
      out << (first ? "" : "; ") << nm << ": (" << format_number(idx.n) << ", " << format_number(idx.kappa) << ", "
          << fixed(absorption_coefficient(m, nm) * 1e-9, 4) << ")";
      first = false;
    }
    out << "\n";
  }
  return kExitOk;
}

namespace {

// Raw flag values; only flags the user actually passed override the config.
struct FlagValues {
  std::string config;
  std::vector<std::string> substrates;
  std::vector<int> wavelengths;
  std::vector<double> fluences;
  std::vector<double> fwhms;
  std::string mold, resist, solver, out, svg, materials_file, accounting;
  std::vector<std::string> probes;
  double resist_nm = 0, ti_c = 0, dt_ns = 0, output_ns = 0, min_cell_nm = 0, end_ns = 0, threshold_pct = 0;
  std::size_t quad_order = 0, workers = 0, max_points = 0;
};

void add_run_options(CLI::App* app, FlagValues& v) {
  app->add_option("--config", v.config, "Run config file ([run] section); flags override it");
  app->add_option("--substrate", v.substrates, "Substrate material(s)")->delimiter(',');
  app->add_option("--wavelength-nm", v.wavelengths, "Laser line(s) in nm")->delimiter(',');
  app->add_option("--fluence-j-cm2", v.fluences, "Fluence(s) in J/cm^2")->delimiter(',');
  app->add_option("--fwhm-ns", v.fwhms, "Pulse FWHM(s) in ns")->delimiter(',');
  app->add_option("--mold", v.mold, "Mold material");
  app->add_option("--resist", v.resist, "Resist material");
  app->add_option("--resist-nm", v.resist_nm, "Resist thickness in nm");
  app->add_option("--solver", v.solver, "analytical | fdm | both");
  app->add_option("--probe", v.probes, "Probe depth(s) in um or polymer-center")->delimiter(',');
  app->add_option("--out", v.out, "Output path (directory for simulate, file otherwise)");
  app->add_option("--svg", v.svg, "Write an SVG plot to this file");
  app->add_option("--materials-file", v.materials_file, "Extra material definitions");
  app->add_option("--dt-ns", v.dt_ns, "FDM time step in ns");
  app->add_option("--output-ns", v.output_ns, "Output sampling interval in ns");
  app->add_option("--min-cell-nm", v.min_cell_nm, "FDM minimum cell width in nm");
  app->add_option("--end-ns", v.end_ns, "Simulated time in ns (default: 4 pulse windows)");
  app->add_option("--quad-order", v.quad_order, "Gauss-Legendre order per panel");
  app->add_option("--ti-c", v.ti_c, "Initial temperature in C");
  app->add_option("--threshold-pct", v.threshold_pct, "compare: maximum peak difference in % of rise");
  app->add_option("--accounting", v.accounting, "separate | included (air/mold transmissivity)");
  app->add_option("--workers", v.workers, "sweep: worker threads (0 = all cores)");
  app->add_option("--max-points", v.max_points, "sweep: cap on the number of points");
}

RunConfig resolve(const CLI::App* app, const FlagValues& v) {
  RunConfig cfg;
  const auto given = [&](const char* name) { return app->count(name) > 0; };
  if (given("--config")) apply_config_file(cfg, v.config);
  if (given("--substrate")) cfg.substrates = v.substrates;
  if (given("--wavelength-nm")) cfg.wavelengths_nm = v.wavelengths;
  if (given("--fluence-j-cm2")) cfg.fluences_j_cm2 = v.fluences;
  if (given("--fwhm-ns")) cfg.fwhms_ns = v.fwhms;
  if (given("--mold")) cfg.mold = v.mold;
  if (given("--resist")) cfg.resist = v.resist;
  if (given("--resist-nm")) cfg.resist_nm = v.resist_nm;
  if (given("--solver")) cfg.solver = parse_solver(v.solver);
  if (given("--probe")) {
    cfg.probes.clear();
    for (const auto& p : v.probes) cfg.probes.push_back(parse_probe(p));
    cfg.probes_from_user = true;
  }
  if (given("--out")) cfg.out = v.out;
  if (given("--svg")) cfg.svg = v.svg;
  if (given("--materials-file")) cfg.materials_file = v.materials_file;
  if (given("--dt-ns")) cfg.dt_ns = v.dt_ns;
  if (given("--output-ns")) cfg.output_ns = v.output_ns;
  if (given("--min-cell-nm")) cfg.min_cell_nm = v.min_cell_nm;
  if (given("--end-ns")) cfg.end_ns = v.end_ns;
  if (given("--quad-order")) cfg.quad_order = v.quad_order;
  if (given("--ti-c")) cfg.ti_c = v.ti_c;
  if (given("--threshold-pct")) cfg.threshold_pct = v.threshold_pct;
  if (given("--accounting")) {
    if (v.accounting == "separate") cfg.accounting = TransmissivityAccounting::kSeparate;
    else if (v.accounting == "included") cfg.accounting = TransmissivityAccounting::kIncluded;
    else throw ValidationError("accounting", "expected separate or included");
  }
  if (given("--workers")) cfg.workers = v.workers;
  if (given("--max-points")) cfg.max_points = v.max_points;
  return cfg;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Excimer-laser heating of mold/resist/substrate stacks in laser-assisted nanoimprinting", "lanheat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  FlagValues absorbance_v, simulate_v, sweep_v, compare_v, materials_v;
  auto* absorbance = app.add_subcommand("absorbance", "Per-layer optical absorbance of the imprint stack");
  add_run_options(absorbance, absorbance_v);
  auto* simulate = app.add_subcommand("simulate", "Temperature histories for one configuration");
  add_run_options(simulate, simulate_v);
  auto* sweep = app.add_subcommand("sweep", "Cartesian parameter sweep with long-format CSV output");
  add_run_options(sweep, sweep_v);
  auto* compare = app.add_subcommand("compare", "Analytical versus FDM surface temperature");
  add_run_options(compare, compare_v);
  auto* materials = app.add_subcommand("materials", "Material database");
  materials->require_subcommand(1);
  auto* list = materials->add_subcommand("list", "List known materials");
  bool canonical = false;
  list->add_option("--materials-file", materials_v.materials_file, "Extra material definitions");
  list->add_flag("--canonical", canonical, "Print the canonical material file instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (absorbance->parsed()) return cmd_absorbance(resolve(absorbance, absorbance_v), out, err);
    if (simulate->parsed()) return cmd_simulate(resolve(simulate, simulate_v), out, err);
    if (sweep->parsed()) return cmd_sweep(resolve(sweep, sweep_v), out, err);
    if (compare->parsed()) return cmd_compare(resolve(compare, compare_v), out, err);
    if (list->parsed()) {
      RunConfig cfg;
      cfg.materials_file = materials_v.materials_file;
      return cmd_materials_list(cfg, canonical, out, err);
    }
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const Error& e) {
    // Validation, parse and lookup failures.
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace lanheat::cli
