// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lanheat/analytical.hpp"
#include "lanheat/fdm.hpp"
#include "lanheat/optics.hpp"
#include "lanheat/scenario.hpp"
#include "oracles.hpp"

using namespace lanheat;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Verdict()> check;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

const MaterialDB& db() {
  static const MaterialDB instance = MaterialDB::builtin();
  return instance;
}

LanScenario scenario(const std::string& substrate, WavelengthNm nm, double fluence_j_cm2, double fwhm_ns) {
  LanScenario sc;
  sc.substrate = substrate;
  sc.wavelength_nm = nm;
  sc.fluence = fluence_j_cm2 * 1e4;
  sc.fwhm = fwhm_ns * 1e-9;
  return sc;
}

struct Run {
  TemperatureSeries analytical_surface;
  TemperatureSeries fdm_surface;
  TemperatureField field;
};

Run simulate(const LanScenario& sc, bool with_fdm, NumericalSettings num = {}) {
  const auto optics = lan_absorbance(db(), sc);
  const auto pulse = lan_pulse(sc);
  const double end = num.end_time.value_or(default_end_time(pulse));
  num.end_time = end;
  Run r;
  std::vector<double> times;
  if (with_fdm) {
    r.field = run(fdm_config(db(), sc, optics, num));
    r.fdm_surface = probe(r.field, 0.0);
    times = r.field.times;
  } else {
    times = output_times(end, num.output_interval);
  }
  const AnalyticalModel model(analytical_config(db(), sc, optics, num));
  r.analytical_surface = surface_history(model, times);
  return r;
}

double analytical_peak(const LanScenario& sc, double x) {
  const auto optics = lan_absorbance(db(), sc);
  const AnalyticalModel model(analytical_config(db(), sc, optics));
  const auto times = output_times(default_end_time(lan_pulse(sc)), 0.25e-9);
  return model.history(x, times).peak().temperature;
}

Verdict absorbance_reproduction() {
  struct Case {
    std::string substrate;
    WavelengthNm nm;
    double expected;
  };
  const std::vector<Case> cases{{"Copper", 193, 71.42}, {"Copper", 248, 73.09}, {"Copper", 308, 73.13},
                                {"Si", 193, 39.5},      {"Si", 248, 42.1},      {"Si", 308, 53.3}};
  std::ostringstream detail;
  bool pass = true;
  for (auto accounting : {TransmissivityAccounting::kSeparate, TransmissivityAccounting::kIncluded}) {
    pass = true;
    detail.str("");
    detail << (accounting == TransmissivityAccounting::kSeparate ? "separate:" : "included:");
    for (const auto& c : cases) {
      auto sc = scenario(c.substrate, c.nm, 0.6, 20);
      sc.accounting = accounting;
      const double a = 100.0 * lan_absorbance(db(), sc).substrate_absorption;
      pass = pass && std::abs(a - c.expected) <= 1.0;
      detail << " " << c.substrate << "@" << c.nm << "=" << fmt("%.2f", a) << "%";
    }
    if (pass) break;
  }
  return {pass, detail.str()};
}

Verdict copper_peak() {
  const double peak = analytical_peak(scenario("Copper", 308, 0.6, 20), 0.0);
  return {std::abs(peak - 760.0) <= 76.0, "surface peak " + fmt("%.1f", peak) + " C (760 +/- 10 %)"};
}

Verdict depth_decay() {
  const double peak = analytical_peak(scenario("Copper", 308, 0.6, 20), 5e-6);
  return {peak < 150.0, "5 um peak " + fmt("%.1f", peak) + " C (< 150)"};
}

Verdict silicon_reference() {
  const double peak = analytical_peak(scenario("Si", 308, 0.35, 20), 0.0);
  return {std::abs(peak - 700.0) <= 70.0, "surface peak " + fmt("%.1f", peak) + " C (700 +/- 10 %)"};
}

Verdict solver_agreement() {
  bool pass = true;
  std::ostringstream detail;
  for (double fwhm : {20.0, 30.0, 40.0}) {
    const auto r = simulate(scenario("Copper", 308, 0.6, fwhm), true);
    const auto& a = r.analytical_surface;
    const auto& f = r.fdm_surface;
    const double rise = a.peak().temperature - 25.0;
    double worst = 0.0;
    for (std::size_t k = 0; k < a.times.size(); ++k)
      worst = std::max(worst, std::abs(a.temperatures[k] - f.temperatures[k]));
    const double pct = 100.0 * worst / rise;
    pass = pass && pct < 5.0;
    detail << fmt("%.0f ns: ", fwhm) << fmt("max |dT| %.2f%% of rise; ", pct);
  }
  return {pass, detail.str()};
}

Verdict polymer_above_tg() {
  bool pass = true;
  std::ostringstream detail;
  for (double fwhm : {20.0, 30.0, 40.0}) {
    const auto r = simulate(scenario("Copper", 308, 0.6, fwhm), true);
    const double peak = probe(r.field, -100e-9).peak().temperature;
    pass = pass && peak > 100.0;
    detail << fmt("%.0f ns: ", fwhm) << fmt("%.1f C; ", peak);
  }
  return {pass, detail.str()};
}

Verdict monotonicity() {
  bool pass = true;
  std::ostringstream detail;
  for (const char* substrate : {"Copper", "Si"}) {
    double prev_a = -1e300, prev_f = -1e300;
    for (double f : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6}) {
      const auto r = simulate(scenario(substrate, 308, f, 20), true);
      const double pa = r.analytical_surface.peak().temperature;
      const double pf = r.fdm_surface.peak().temperature;
      pass = pass && pa > prev_a && pf > prev_f;
      prev_a = pa;
      prev_f = pf;
    }
    prev_a = prev_f = 1e300;
    for (double fwhm : {20.0, 25.0, 30.0, 35.0, 40.0}) {
      const auto r = simulate(scenario(substrate, 308, 0.6, fwhm), true);
      const double pa = r.analytical_surface.peak().temperature;
      const double pf = r.fdm_surface.peak().temperature;
      pass = pass && pa < prev_a && pf < prev_f;
      prev_a = pa;
      prev_f = pf;
    }
    detail << substrate << " fluence 0.1..0.6 and FWHM 20..40 ns checked; ";
  }
  return {pass, detail.str()};
}

Verdict wavelength_insensitivity() {
  std::vector<double> rises;
  std::ostringstream detail;
  for (WavelengthNm nm : {193, 248, 308}) {
    const auto r = simulate(scenario("Copper", nm, 0.6, 30), true);
    rises.push_back(probe(r.field, -100e-9).peak().temperature - 25.0);
    detail << nm << " nm: " << fmt("%.1f C; ", rises.back() + 25.0);
  }
  const double hi = std::max({rises[0], rises[1], rises[2]});
  const double lo = std::min({rises[0], rises[1], rises[2]});
  const double spread = 100.0 * (hi - lo) / hi;
  detail << fmt("spread %.2f%% of rise", spread);
  return {spread < 5.0 && rises[0] == lo, detail.str()};
}

Verdict property_suite() {
  std::ostringstream detail;
  bool pass = true;
  const auto note = [&](const std::string& name, bool ok, double value) {
    pass = pass && ok;
    detail << name << (ok ? " ok" : " FAILED") << fmt(" (%.2e); ", value);
  };

  // Optics energy conservation.
  {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> n(1.0, 5.0), k(0.0, 4.0), d(0.0, 500e-9);
    double worst = 0.0;
    for (int trial = 0; trial < 2000; ++trial) {
      LayerStack s;
      auto layer = [&](double kappa) {
        Material m{"m", 1000, 1000, 1, {{308, {n(rng), kappa}}}, {}};
        return m;
      };
      s.layers.push_back({layer(0.0), std::nullopt});
      const int films = static_cast<int>(rng() % 5);
      for (int f = 0; f < films; ++f) s.layers.push_back({layer(k(rng)), d(rng)});
      s.layers.push_back({layer(k(rng)), std::nullopt});
      const auto rep = analyze_stack(s, 308);
      double total = rep.reflectance + rep.transmittance;
      for (double a : rep.absorbance) total += a;
      worst = std::max(worst, std::abs(total - 1.0));
    }
    note("optics R+T+sum(A)", worst < 1e-9, worst);
  }
  // Green's function energy.
  {
    const auto& cu = db().at("Copper");
    const double alpha = thermal_diffusivity(cu), t = 20e-9, q = 1000.0;
    const double w = std::sqrt(4 * alpha * t);
    const double e = cu.volumetric_heat_capacity() *
                     oracle::simpson([&](double x) { return plane_source_response(x, t, q, cu); }, -12 * w, 12 * w,
                                     20000);
    note("kernel energy", std::abs(e / q - 1.0) < 1e-6, std::abs(e / q - 1.0));
  }
  // Closed-form depth integral against a 1e6-interval trapezoid.
  {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> bw(0.1, 10.0), xb(0.0, 5.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const double beta = bw(rng) / 2.0, x = xb(rng) / beta;
      const double half = std::max(40.0 / beta, x + 40.0);
      const auto f = [&](double xi) { return std::exp(-beta * std::abs(xi) - (x - xi) * (x - xi) / 4.0); };
      // Trapezoid with Richardson extrapolation removes its h^2 term.
      const auto trap = [&](std::size_t nint) {
        return oracle::trapezoid(f, -half, 0.0, nint) + oracle::trapezoid(f, 0.0, half, nint);
      };
      const double ref = (4.0 * trap(500000) - trap(250000)) / 3.0;
      worst = std::max(worst, std::abs(xi_integral_closed_form(x, 1.0, beta, 1.0) / ref - 1.0));
    }
    note("closed-form xi integral", worst < 1e-9, worst);
  }
  // FDM enthalpy.
  {
    const auto r = simulate(scenario("Copper", 308, 0.6, 20), true);
    const double err = std::abs(r.field.final_enthalpy / r.field.deposited_energy - 1.0);
    note("FDM enthalpy", err < 0.01, err);
  }
  // Quadrature order.
  {
    const auto sc = scenario("Copper", 308, 0.6, 20);
    const auto optics = lan_absorbance(db(), sc);
    NumericalSettings hi;
    hi.quadrature_order = 208;
    const AnalyticalModel a(analytical_config(db(), sc, optics)), b(analytical_config(db(), sc, optics, hi));
    double worst = 0.0;
    for (double t = 1e-9; t < 200e-9; t += 3e-9)
      for (double x : {0.0, 1e-7, 1e-6, 5e-6}) worst = std::max(worst, std::abs(a.temperature(x, t) / b.temperature(x, t) - 1.0));
    note("order 104 vs 208", worst < 1e-4, worst);
  }
  // Grid and time-step refinement.
  {
    const auto sc = scenario("Copper", 308, 0.6, 20);
    const double base = simulate(sc, true).fdm_surface.peak().temperature;
    NumericalSettings fine_h, fine_t;
    fine_h.min_cell = 2.5e-9;
    fine_t.dt = 0.05e-9;
    const double dh = std::abs(simulate(sc, true, fine_h).fdm_surface.peak().temperature / base - 1.0);
    const double dt = std::abs(simulate(sc, true, fine_t).fdm_surface.peak().temperature / base - 1.0);
    note("refinement", dh < 0.01 && dt < 0.01, std::max(dh, dt));
  }
  // Zero fluence.
  {
    const auto r = simulate(scenario("Copper", 308, 0.0, 20), true);
    bool exact = true;
    for (double v : r.analytical_surface.temperatures) exact = exact && v == 25.0;
    for (double v : r.field.values) exact = exact && v == 25.0;
    note("zero fluence", exact, 0.0);
  }
  return {pass, detail.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "absorbance reproduction", 1.0, absorbance_reproduction},
      {2, "copper peak temperature", 5.0, copper_peak},
      {3, "depth decay at 5 um", 5.0, depth_decay},
      {4, "silicon reference", 5.0, silicon_reference},
      {5, "analytical/FDM agreement", 120.0, solver_agreement},
      {6, "polymer above glass transition", 120.0, polymer_above_tg},
      {7, "monotonicity in fluence and FWHM", 120.0, monotonicity},
      {8, "wavelength insensitivity", 120.0, wavelength_insensitivity},
      {9, "property suite", 180.0, property_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = elapsed <= c.budget_s;
    const bool ok = v.pass && in_budget;
    failures += ok ? 0 : 1;
    std::printf("[%s] AC%d %s: %s [%.2f s, budget %.0f s%s]\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                v.detail.c_str(), elapsed, c.budget_s, in_budget ? "" : ", OVER BUDGET");
    std::fflush(stdout);
  }
  std::printf("%d of %zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
