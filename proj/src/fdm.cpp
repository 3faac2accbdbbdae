#include "lanheat/fdm.hpp"

#include <algorithm>
#include <cmath>

#include "lanheat/errors.hpp"
#include "lanheat/tridiagonal.hpp"

namespace lanheat {

namespace {

// Widths for one side of the resist, ordered outward from it: uniform fine
// cells followed by a geometric progression that ends exactly at `thickness`.
std::vector<double> graded_widths(double thickness, const FdmGeometry& g) {
  const double h = g.min_cell;
  double fine = std::min(g.fine_extent, thickness);
  double rest = thickness - fine;

  // Number of stretched cells at the maximum ratio needed to cover `rest`.
  std::size_t count = 0;
  double covered = 0.0;
  double width = h;
  while (covered < rest) {
    width *= g.max_stretch;
    covered += width;
    ++count;
  }
  // A remainder too short for a graded tail is absorbed by the fine zone.
  if (count > 0 && static_cast<double>(count) * h >= rest) {
    fine = thickness;
    rest = 0.0;
    count = 0;
  }

  const auto n_fine = static_cast<std::size_t>(std::max(1.0, std::round(fine / h)));
  std::vector<double> widths(n_fine, fine / static_cast<double>(n_fine));
  if (count == 0) return widths;

  // Ratio in (1, max_stretch] for which `count` cells sum to `rest`.
  const auto tail_sum = [&](double ratio) {
    double sum = 0.0;
    double w = widths.back();
    for (std::size_t k = 0; k < count; ++k) {
      w *= ratio;
      sum += w;
    }
    return sum;
  };
  double lo = 1.0;
  double hi = g.max_stretch;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (tail_sum(mid) < rest ? lo : hi) = mid;
  }
  double w = widths.back();
  double sum = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    w *= hi;
    widths.push_back(w);
    sum += w;
  }
  widths.back() += rest - sum;
  return widths;
}

}  // namespace

std::size_t Grid1D::cell_containing(double x) const {
  if (!(x >= left && x <= right)) throw ValidationError("probe", "position outside the computational domain");
  const auto it = std::upper_bound(faces.begin(), faces.end(), x);
  const auto i = static_cast<std::size_t>(it - faces.begin());
  return std::clamp<std::size_t>(i, 1, size()) - 1;
}

void FdmConfig::validate() const {
  const auto& g = geometry;
  if (!(g.quartz_thickness > 0.0)) throw ValidationError("geometry.quartz_thickness", "must be positive");
  if (!(g.polymer_thickness > 0.0)) throw ValidationError("geometry.polymer_thickness", "must be positive");
  if (!(g.substrate_thickness > 0.0)) throw ValidationError("geometry.substrate_thickness", "must be positive");
  if (!(g.min_cell > 0.0)) throw ValidationError("geometry.min_cell", "must be positive");
  if (!(g.fine_extent >= 0.0)) throw ValidationError("geometry.fine_extent", "must be non-negative");
  if (!(g.max_stretch > 1.0)) throw ValidationError("geometry.max_stretch", "must exceed 1");
  lanheat::validate(quartz);
  lanheat::validate(polymer);
  lanheat::validate(substrate);
  if (!(dt > 0.0)) throw ValidationError("dt", "must be positive");
  if (!(end_time >= pulse.window)) throw ValidationError("end_time", "must cover the pulse window");
  if (!(output_interval > 0.0)) throw ValidationError("output_interval", "must be positive");
  if (!(polymer_fraction >= 0.0 && polymer_fraction <= 1.0)) throw ValidationError("polymer_fraction", "must lie in [0, 1]");
  if (!(substrate_fraction >= 0.0 && substrate_fraction <= 1.0)) {
    throw ValidationError("substrate_fraction", "must lie in [0, 1]");
  }
  if (!(substrate_beta >= 0.0)) throw ValidationError("substrate_beta", "must be non-negative");
}

Grid1D build_grid(const FdmGeometry& g) {
  if (!(g.quartz_thickness > 0.0 && g.polymer_thickness > 0.0 && g.substrate_thickness > 0.0)) {
    throw ValidationError("geometry", "layer thicknesses must be positive");
  }
  if (!(g.min_cell > 0.0) || !(g.max_stretch > 1.0)) throw ValidationError("geometry", "invalid mesh controls");

  auto quartz = graded_widths(g.quartz_thickness, g);
  std::reverse(quartz.begin(), quartz.end());
  const auto n_poly = static_cast<std::size_t>(std::max(1.0, std::round(g.polymer_thickness / g.min_cell)));
  const auto substrate = graded_widths(g.substrate_thickness, g);

  Grid1D grid;
  grid.left = -(g.quartz_thickness + g.polymer_thickness);
  grid.right = g.substrate_thickness;
  grid.polymer_begin = quartz.size();
  grid.substrate_begin = quartz.size() + n_poly;

  grid.faces.push_back(grid.left);
  // Each layer is laid out from its exact left face; the last cell takes up rounding.
  const auto append = [&](double left_face, double right_face, const std::vector<double>& widths, Region region) {
    grid.faces.back() = left_face;
    double face = left_face;
    for (std::size_t k = 0; k < widths.size(); ++k) {
      const double next = (k + 1 == widths.size()) ? right_face : face + widths[k];
      grid.centers.push_back(0.5 * (face + next));
      grid.widths.push_back(next - face);
      grid.regions.push_back(region);
      grid.faces.push_back(next);
      face = next;
    }
  };
  append(grid.left, -g.polymer_thickness, quartz, Region::kQuartz);
  append(-g.polymer_thickness, 0.0,
         std::vector<double>(n_poly, g.polymer_thickness / static_cast<double>(n_poly)), Region::kPolymer);
  append(0.0, grid.right, substrate, Region::kSubstrate);
  return grid;
}

ImplicitConductionSolver::ImplicitConductionSolver(const FdmConfig& cfg, Grid1D grid)
    : cfg_(cfg), grid_(std::move(grid)) {
  cfg_.validate();
  const std::size_t n = grid_.size();
  if (n < 2) throw ValidationError("grid", "needs at least two cells");

  const auto material = [&](std::size_t i) -> const Material& {
    switch (grid_.regions[i]) {
      case Region::kQuartz: return cfg_.quartz;
      case Region::kPolymer: return cfg_.polymer;
      case Region::kSubstrate: break;
    }
    return cfg_.substrate;
  };

  capacity_.resize(n);
  std::vector<double> half_resistance(n);  // dx / (2k)
  for (std::size_t i = 0; i < n; ++i) {
    const auto& m = material(i);
    capacity_[i] = m.volumetric_heat_capacity() * grid_.widths[i];
    half_resistance[i] = 0.5 * grid_.widths[i] / m.thermal_conductivity;
  }

  lower_.assign(n, 0.0);
  upper_.assign(n, 0.0);
  diag_.resize(n);
  for (std::size_t i = 0; i < n; ++i) diag_[i] = capacity_[i] / cfg_.dt;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // Series resistance of the two half cells: harmonic mean of k.
    const double g = 1.0 / (half_resistance[i] + half_resistance[i + 1]);
    upper_[i] = -g;
    lower_[i + 1] = -g;
    diag_[i] += g;
    diag_[i + 1] += g;
  }
  if (cfg_.boundary == OuterBoundary::kFixedTemperature) {
    diag_.front() += 1.0 / half_resistance.front();
    diag_.back() += 1.0 / half_resistance.back();
  }

  deposit_.assign(n, 0.0);
  const double poly_width = cfg_.geometry.polymer_thickness;
  for (std::size_t i = 0; i < n; ++i) {
    if (grid_.regions[i] == Region::kPolymer) {
      deposit_[i] = cfg_.polymer_fraction * grid_.widths[i] / poly_width;
    } else if (grid_.regions[i] == Region::kSubstrate) {
      const double x0 = grid_.face(i);
      deposit_[i] = cfg_.substrate_fraction * beer_lambert_fraction(cfg_.substrate_beta, x0, x0 + grid_.widths[i]);
    }
  }
}

FdmState ImplicitConductionSolver::initial_state() const {
  return {0.0, std::vector<double>(grid_.size(), cfg_.initial_temperature)};
}

double ImplicitConductionSolver::cell_source(std::size_t i, double t) const {
  return deposit_[i] * intensity(cfg_.pulse, t);
}

FdmState ImplicitConductionSolver::step(const FdmState& state) const {
  const std::size_t n = grid_.size();
  if (state.temperatures.size() != n) throw ValidationError("state", "does not match the grid");
  const double t_next = state.time + cfg_.dt;
  const double power = intensity(cfg_.pulse, t_next);

  // Solve for the excess over the initial temperature so a resting state is an exact fixed point.
  std::vector<double> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = capacity_[i] / cfg_.dt * (state.temperatures[i] - cfg_.initial_temperature) + deposit_[i] * power;
  }
  auto excess = solve_tridiagonal(lower_, diag_, upper_, rhs);

  FdmState next{t_next, std::move(excess)};
  for (auto& v : next.temperatures) {
    v += cfg_.initial_temperature;
    if (!std::isfinite(v)) throw SolverError("non-finite temperature at t = " + std::to_string(t_next) + " s");
  }
  return next;
}

double ImplicitConductionSolver::enthalpy(const FdmState& state) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    sum += capacity_[i] * (state.temperatures[i] - cfg_.initial_temperature);
  }
  return sum;
}

FdmState step(const FdmState& state, const FdmConfig& cfg, const Grid1D& grid) {
  return ImplicitConductionSolver(cfg, grid).step(state);
}

TemperatureField run(const FdmConfig& cfg) {
  const ImplicitConductionSolver solver(cfg, build_grid(cfg));
  const auto& grid = solver.grid();

  TemperatureField field;
  field.grid = grid;
  field.initial_temperature = cfg.initial_temperature;

  const auto steps = static_cast<std::size_t>(std::ceil(cfg.end_time / cfg.dt - 1e-9));
  const auto stride = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(cfg.output_interval / cfg.dt)));

  FdmState state = solver.initial_state();
  const auto record = [&](const FdmState& s) {
    field.times.push_back(s.time);
    field.values.insert(field.values.end(), s.temperatures.begin(), s.temperatures.end());
  };
  record(state);

  double source_total = 0.0;
  for (std::size_t k = 1; k <= steps; ++k) {
    FdmState next = solver.step(state);
    next.time = static_cast<double>(k) * cfg.dt;
    double flux = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) flux += solver.cell_source(i, next.time);
    source_total += flux * cfg.dt;
    state = std::move(next);
    if (k % stride == 0 || k == steps) record(state);
  }
  field.deposited_energy = source_total;
  field.final_enthalpy = solver.enthalpy(state);
  return field;
}

TemperatureSeries probe(const TemperatureField& field, double x) {
  const std::size_t cell = field.grid.cell_containing(x);
  TemperatureSeries series;
  series.position = field.grid.centers[cell];
  series.times = field.times;
  series.temperatures.reserve(field.times.size());
  for (std::size_t k = 0; k < field.times.size(); ++k) series.temperatures.push_back(field.at(k, cell));
  return series;
}

}  // namespace lanheat
