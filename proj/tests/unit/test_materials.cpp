#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lanheat/errors.hpp"
#include "lanheat/materials.hpp"

using namespace lanheat;

TEST_CASE("built-in copper carries the reference thermal data") {
  const auto db = MaterialDB::builtin();
  const auto& cu = db.at("Copper");
  CHECK(cu.thermal_conductivity == 352.0);
  CHECK(cu.density == 8940.0);
  CHECK(cu.heat_capacity == 384.9);
  CHECK(db.names() == std::vector<std::string>{"Copper", "FusedSilica", "PMMA", "Si"});
}

TEST_CASE("lookup of an undefined material is a not-found error") {
  CHECK_THROWS_AS(MaterialDB::builtin().at("Gold"), NotFoundError);
}

TEST_CASE("thermal diffusivity") {
  const auto db = MaterialDB::builtin();
  // Hand-evaluated k / (rho C).
  CHECK(thermal_diffusivity(db.at("Copper")) == doctest::Approx(1.0229e-4).epsilon(1e-4));
  CHECK(thermal_diffusivity(db.at("Si")) == doctest::Approx(9.830e-5).epsilon(1e-4));

  Material insulator = db.at("PMMA");
  insulator.thermal_conductivity = 0.0;
  CHECK(thermal_diffusivity(insulator) == 0.0);

  // Linear in k and positive for every built-in.
  for (const auto& [name, m] : db) {
    CHECK(thermal_diffusivity(m) > 0.0);
    Material doubled = m;
    doubled.thermal_conductivity *= 2.0;
    CHECK(thermal_diffusivity(doubled) == doctest::Approx(2.0 * thermal_diffusivity(m)).epsilon(1e-15));
  }
}

TEST_CASE("absorption coefficient from kappa") {
  const auto db = MaterialDB::builtin();
  CHECK(absorption_coefficient(db.at("Copper"), 308) * 1e-9 == doctest::Approx(0.0698).epsilon(0.01));
  CHECK(absorption_coefficient(db.at("Si"), 308) * 1e-9 == doctest::Approx(0.1505).epsilon(0.01));
  CHECK(absorption_coefficient(db.at("FusedSilica"), 308) == 0.0);

  try {
    absorption_coefficient(db.at("Copper"), 532);
    FAIL("expected NotFoundError");
  } catch (const NotFoundError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("193, 248, 308") != std::string::npos);
  }
}

TEST_CASE("tabulated absorption coefficients are self-consistent within 1 %") {
  std::size_t checked = 0;
  for (const auto& [name, m] : MaterialDB::builtin()) {
    for (const auto& [nm, beta] : m.tabulated_absorption_per_nm) {
      const double derived = 4.0 * std::numbers::pi * m.index_at(nm).kappa / nm;
      if (beta == 0.0) {
        CHECK(derived == 0.0);
      } else {
        CHECK(std::abs(derived - beta) <= 0.01 * beta);
      }
      ++checked;
    }
  }
  CHECK(checked == 9);
}

TEST_CASE("built-in database round-trips through the canonical form byte-identically") {
  const auto db = MaterialDB::builtin();
  const std::string text = save_materials(db);
  const auto reloaded = load_materials(text, MaterialDB{});
  CHECK(save_materials(reloaded) == text);
  for (const auto& [name, m] : db) CHECK(reloaded.at(name) == m);
  CHECK(text.find("[Copper]\ndensity = 8940\nheat_capacity = 384.9\nthermal_conductivity = 352\n") == 0);
}

TEST_CASE("user files override built-ins and add materials") {
  const auto db = load_materials(R"(
[Copper]
density = 9000
heat_capacity = 385
thermal_conductivity = 400
refractive_index.308 = [1.35, 1.71]

[Gold]
density = 19300
heat_capacity = 129
thermal_conductivity = 318
refractive_index.308 = [1.6, 1.9]
)");
  CHECK(db.at("Copper").density == 9000.0);
  CHECK(db.at("Copper").refractive_index.size() == 1);
  CHECK(db.at("Gold").thermal_conductivity == 318.0);
  CHECK(db.contains("Si"));
}

TEST_CASE("validation errors name the offending field") {
  const auto field_of = [](const char* text) -> std::string {
    try {
      load_materials(text);
    } catch (const ValidationError& e) {
      return e.field();
    }
    return "";
  };
  CHECK(field_of("[X]\ndensity = -1\nheat_capacity = 1\nthermal_conductivity = 1\nrefractive_index.308 = [1, 0]\n") ==
        "X.density");
  CHECK(field_of("[X]\ndensity = 1\nheat_capacity = 0\nthermal_conductivity = 1\nrefractive_index.308 = [1, 0]\n") ==
        "X.heat_capacity");
  CHECK(field_of("[X]\ndensity = 1\nheat_capacity = 1\nrefractive_index.308 = [1, 0]\n") == "X.thermal_conductivity");
  CHECK(field_of("[X]\ndensity = 1\nheat_capacity = 1\nthermal_conductivity = 1\n") == "X.refractive_index");
  CHECK(field_of("[X]\ndensity = 1\nheat_capacity = 1\nthermal_conductivity = 1\nrefractive_index.308 = [1, -0.1]\n") ==
        "X.refractive_index.308");
  CHECK(field_of("[X]\ndensity = 1\nheat_capacity = 1\nthermal_conductivity = 1\nrefractive_index.308 = [1, 1]\n"
                 "absorption_coefficient_per_nm.308 = 0.5\n") == "X.absorption_coefficient_per_nm.308");
  CHECK(field_of("[X]\ndensity = 1\nheat_capacity = 1\nthermal_conductivity = 1\nrefractive_index.308 = [1, 0]\n"
                 "colour = 3\n") == "X.colour");
  CHECK_THROWS_AS(load_materials("[X]\ndensity = oops\n"), ParseError);
}
