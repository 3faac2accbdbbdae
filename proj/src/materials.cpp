#include "lanheat/materials.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lanheat/errors.hpp"
#include "lanheat/keyvalue.hpp"

namespace lanheat {

namespace {

constexpr std::string_view kIndexPrefix = "refractive_index.";
constexpr std::string_view kAbsorptionPrefix = "absorption_coefficient_per_nm.";

// Absorption coefficients in the reference table carry three to four
// significant digits.
constexpr double kTabulatedAbsorptionTolerance = 0.01;

Material make(std::string name, double rho, double c, double k,
              std::map<WavelengthNm, ComplexIndex> index,
              std::map<WavelengthNm, double> beta_per_nm = {}) {
  return Material{std::move(name), rho, c, k, std::move(index), std::move(beta_per_nm)};
}

WavelengthNm parse_wavelength(std::string_view text, const std::string& field) {
  WavelengthNm nm = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), nm);
  if (ec != std::errc{} || ptr != text.data() + text.size() || nm <= 0) {
    throw ValidationError(field, "wavelength must be a positive integer number of nm");
  }
  return nm;
}

double number_of(const KvEntry& e, const std::string& field) {
  if (const auto* v = std::get_if<double>(&e.value)) return *v;
  throw ValidationError(field, "expected a number (line " + std::to_string(e.line) + ")");
}

Material material_from_section(const KvSection& section) {
  Material m;
  m.name = section.name;
  const auto prefixed = [&](std::string_view key) { return section.name + "." + std::string(key); };
  const auto required = [&](std::string_view key) {
    const KvEntry* e = section.find(key);
    if (e == nullptr) throw ValidationError(prefixed(key), "missing required field");
    return number_of(*e, prefixed(key));
  };
  m.density = required("density");
  m.heat_capacity = required("heat_capacity");
  m.thermal_conductivity = required("thermal_conductivity");

  for (const auto& e : section.entries) {
    std::string_view key = e.key;
    if (key == "density" || key == "heat_capacity" || key == "thermal_conductivity") continue;
    const std::string field = prefixed(key);
    if (key.starts_with(kIndexPrefix)) {
      const auto nm = parse_wavelength(key.substr(kIndexPrefix.size()), field);
      const auto* arr = std::get_if<std::vector<double>>(&e.value);
      if (arr == nullptr || arr->size() != 2) throw ValidationError(field, "expected [n, kappa]");
      m.refractive_index[nm] = ComplexIndex{(*arr)[0], (*arr)[1]};
    } else if (key.starts_with(kAbsorptionPrefix)) {
      const auto nm = parse_wavelength(key.substr(kAbsorptionPrefix.size()), field);
      m.tabulated_absorption_per_nm[nm] = number_of(e, field);
    } else {
      throw ValidationError(field, "unknown field");
    }
  }
  return m;
}

}  // namespace

const ComplexIndex& Material::index_at(WavelengthNm nm) const {
  if (auto it = refractive_index.find(nm); it != refractive_index.end()) return it->second;
  std::string available;
  for (const auto& [w, _] : refractive_index) {
    if (!available.empty()) available += ", ";
    available += std::to_string(w);
  }
  throw NotFoundError("material '" + name + "' has no optical data at " + std::to_string(nm) +
                      " nm (available: " + (available.empty() ? "none" : available) + ")");
}

void validate(const Material& m) {
  const auto field = [&](std::string_view f) { return m.name + "." + std::string(f); };
  if (m.name.empty()) throw ValidationError("name", "material name must not be empty");
  if (!(m.density > 0.0) || !std::isfinite(m.density)) throw ValidationError(field("density"), "must be positive");
  if (!(m.heat_capacity > 0.0) || !std::isfinite(m.heat_capacity)) {
    throw ValidationError(field("heat_capacity"), "must be positive");
  }
  if (!(m.thermal_conductivity >= 0.0) || !std::isfinite(m.thermal_conductivity)) {
    throw ValidationError(field("thermal_conductivity"), "must be non-negative");
  }
  if (m.refractive_index.empty()) {
    throw ValidationError(field("refractive_index"), "at least one wavelength entry is required");
  }
  for (const auto& [nm, idx] : m.refractive_index) {
    const auto f = field("refractive_index." + std::to_string(nm));
    if (nm <= 0) throw ValidationError(f, "wavelength must be positive");
    if (!std::isfinite(idx.n) || !std::isfinite(idx.kappa)) throw ValidationError(f, "must be finite");
    if (idx.kappa < 0.0) throw ValidationError(f, "kappa must be non-negative");
  }
  for (const auto& [nm, beta] : m.tabulated_absorption_per_nm) {
    const auto f = field(std::string(kAbsorptionPrefix) + std::to_string(nm));
    if (!m.refractive_index.contains(nm)) throw ValidationError(f, "no refractive index at this wavelength");
    const double derived = absorption_coefficient(m, nm) * 1e-9;
    const double scale = std::max(std::abs(beta), std::abs(derived));
    if (scale > 0.0 && std::abs(derived - beta) > kTabulatedAbsorptionTolerance * scale) {
      throw ValidationError(f, "inconsistent with 4*pi*kappa/lambda = " + format_number(derived) + " 1/nm");
    }
  }
}

double thermal_diffusivity(const Material& m) { return m.thermal_conductivity / (m.density * m.heat_capacity); }

double absorption_coefficient(const Material& m, WavelengthNm nm) {
  return 4.0 * std::numbers::pi * m.index_at(nm).kappa / wavelength_to_meters(nm);
}

MaterialDB MaterialDB::builtin() {
  MaterialDB db;
  db.insert(make("Si", 2300, 707.71, 160,
                 {{193, {0.872, 2.757}}, {248, {1.570, 3.565}}, {308, {5.013, 3.689}}},
                 {{193, 0.1795}, {248, 0.1806}, {308, 0.1505}}));
  db.insert(make("Copper", 8940, 384.9, 352,
                 {{193, {0.972, 1.403}}, {248, {1.470, 1.780}}, {308, {1.350, 1.710}}},
                 {{193, 0.0914}, {248, 0.0902}, {308, 0.0698}}));
  // Transparent at all three laser lines.
  db.insert(make("PMMA", 1170, 1380, 0.16, {{193, {1.492, 0.0}}, {248, {1.492, 0.0}}, {308, {1.492, 0.0}}}));
  db.insert(make("FusedSilica", 2201, 787.52, 1.30,
                 {{193, {1.560841, 0.0}}, {248, {1.508601, 0.0}}, {308, {1.485663, 0.0}}},
                 {{193, 0.0}, {248, 0.0}, {308, 0.0}}));
  return db;
}

void MaterialDB::insert(Material m) {
  validate(m);
  auto name = m.name;
  materials_.insert_or_assign(std::move(name), std::move(m));
}

bool MaterialDB::contains(std::string_view name) const { return materials_.find(name) != materials_.end(); }

const Material& MaterialDB::at(std::string_view name) const {
  if (auto it = materials_.find(name); it != materials_.end()) return it->second;
  throw NotFoundError("unknown material '" + std::string(name) + "'");
}

std::vector<std::string> MaterialDB::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : materials_) out.push_back(name);
  return out;
}

MaterialDB load_materials(std::string_view document, MaterialDB base) {
  const KvDocument doc = parse_kv(document);
  for (const auto& section : doc.sections) {
    if (section.name.empty()) {
      throw ParseError("entries must appear inside a [MaterialName] section", section.entries.front().line);
    }
    base.insert(material_from_section(section));
  }
  return base;
}

MaterialDB load_materials_file(const std::string& path, MaterialDB base) {
  return load_materials(read_text_file(path), std::move(base));
}

std::string save_materials(const MaterialDB& db) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, m] : db) {
    if (!first) out << '\n';
    first = false;
    out << '[' << name << "]\n";
    out << "density = " << format_number(m.density) << '\n';
    out << "heat_capacity = " << format_number(m.heat_capacity) << '\n';
    out << "thermal_conductivity = " << format_number(m.thermal_conductivity) << '\n';
    for (const auto& [nm, idx] : m.refractive_index) {
      out << kIndexPrefix << nm << " = [" << format_number(idx.n) << ", " << format_number(idx.kappa) << "]\n";
    }
    for (const auto& [nm, beta] : m.tabulated_absorption_per_nm) {
      out << kAbsorptionPrefix << nm << " = " << format_number(beta) << '\n';
    }
  }
  return out.str();
}

}  // namespace lanheat
