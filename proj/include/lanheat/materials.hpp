#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lanheat {

/// Laser lines are addressed by integer wavelength in nanometres; lookups are exact.
using WavelengthNm = int;

inline constexpr double wavelength_to_meters(WavelengthNm nm) { return static_cast<double>(nm) * 1e-9; }

/// Complex refractive index n + i*kappa. kappa >= 0 means absorbing.
struct ComplexIndex {
  double n = 1.0;
  double kappa = 0.0;

  std::complex<double> value() const { return {n, kappa}; }
  friend bool operator==(const ComplexIndex&, const ComplexIndex&) = default;
};

/// Constant thermo-optical properties of one material, SI units.
struct Material {
  std::string name;
  double density = 0.0;               // kg/m^3
  double heat_capacity = 0.0;         // J/(kg K)
  double thermal_conductivity = 0.0;  // W/(m K)
  std::map<WavelengthNm, ComplexIndex> refractive_index;
  // Optional tabulated absorption coefficients in 1/nm as given. Kept as
  // a consistency reference for 4*pi*kappa/lambda; never used in kernels.
  std::map<WavelengthNm, double> tabulated_absorption_per_nm;

  double volumetric_heat_capacity() const { return density * heat_capacity; }

  /// Throws NotFoundError listing the available wavelengths.
  const ComplexIndex& index_at(WavelengthNm nm) const;

  friend bool operator==(const Material&, const Material&) = default;
};

/// Throws ValidationError naming the first offending field.
void validate(const Material& m);

/// k / (rho C), m^2/s.
double thermal_diffusivity(const Material& m);

/// 4 pi kappa / lambda, 1/m.
double absorption_coefficient(const Material& m, WavelengthNm nm);

/// Immutable-after-construction collection of materials keyed by name.
class MaterialDB {
 public:
  MaterialDB() = default;

  /// Si, Copper, PMMA and FusedSilica with the reference thermo-optical data.
  static MaterialDB builtin();

  /// Inserts or replaces by name. The material is validated first.
  void insert(Material m);

  bool contains(std::string_view name) const;
  /// Throws NotFoundError.
  const Material& at(std::string_view name) const;
  std::vector<std::string> names() const;
  std::size_t size() const { return materials_.size(); }

  auto begin() const { return materials_.begin(); }
  auto end() const { return materials_.end(); }

 private:
  std::map<std::string, Material, std::less<>> materials_;
};

/// Parses a material document and merges it over `base` (user entries win by name).
MaterialDB load_materials(std::string_view document, MaterialDB base = MaterialDB::builtin());
MaterialDB load_materials_file(const std::string& path, MaterialDB base = MaterialDB::builtin());

/// Canonical text form: materials sorted by name, fixed key order, shortest
/// round-trip numbers. `load_materials(save_materials(db))` reproduces `db`.
std::string save_materials(const MaterialDB& db);

}  // namespace lanheat
