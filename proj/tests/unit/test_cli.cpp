#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "lanheat/cli/commands.hpp"
#include "lanheat/cli/csv.hpp"

namespace fs = std::filesystem;
using namespace lanheat;
using namespace lanheat::cli;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "lanheat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("lanheat_test_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Peak surface temperature for every (key column value) in a sweep CSV.
std::map<std::string, double> peaks_by(const std::string& csv, std::size_t key_column, const std::string& solver) {
  std::map<std::string, double> peaks;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("substrate,", 0) == 0) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) f.push_back(c);
    if (f.size() == 8 && f[4] == solver && f[5] == "surface" && f[6] == "peak_T_C") peaks[f[key_column]] = std::stod(f[7]);
  }
  return peaks;
}

const std::vector<std::string> kFast{"--dt-ns", "0.5", "--output-ns", "1", "--end-ns", "120"};

std::vector<std::string> with_fast(std::vector<std::string> args) {
  args.insert(args.end(), kFast.begin(), kFast.end());
  return args;
}

}  // namespace

TEST_CASE("absorbance command") {
  const auto r = invoke({"absorbance", "--substrate", "Copper,Si", "--wavelength-nm", "193,248,308"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("Copper") != std::string::npos);
  CHECK(r.out.find("Si") != std::string::npos);
}

TEST_CASE("exit codes for bad input") {
  CHECK(invoke({"absorbance", "--substrate", "Gold"}).code == kExitValidation);
  CHECK(invoke({"absorbance", "--wavelength-nm", "532"}).code == kExitValidation);
  CHECK(invoke({"simulate", "--fluence-j-cm2", "-1"}).code == kExitValidation);
  CHECK(invoke({"simulate", "--solver", "magic"}).code == kExitValidation);
  CHECK(invoke({"--no-such-flag"}).code == kExitValidation);
  CHECK(invoke({"simulate", "--solver", "analytical", "--probe", "polymer-center"}).code == kExitValidation);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("simulate writes one CSV per series with an audit header") {
  TempDir dir;
  const auto r = invoke(with_fast({"simulate", "--out", dir / "run", "--probe", "0,5,polymer-center", "--svg",
                                   dir / "plot.svg"}));
  REQUIRE(r.code == kExitOk);
  for (const char* name : {"analytical_surface.csv", "fdm_surface.csv", "analytical_depth_5um.csv",
                           "fdm_depth_5um.csv", "fdm_polymer-center.csv"})
    CHECK(fs::exists(fs::path(dir / "run") / name));
  CHECK_FALSE(fs::exists(fs::path(dir / "run") / "analytical_polymer-center.csv"));
  const std::string csv = slurp((fs::path(dir / "run") / "fdm_surface.csv").string());
  CHECK(csv.rfind("# ", 0) == 0);
  CHECK(csv.find("t_ns,T_C\n") != std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(slurp(dir / "plot.svg").find("<svg") != std::string::npos);
}

TEST_CASE("compare exit status follows the threshold") {
  TempDir dir;
  const auto ok = invoke(with_fast({"compare", "--out", dir / "c.csv"}));
  CHECK(ok.code == kExitOk);
  CHECK(slurp(dir / "c.csv").find("t_ns,T_analytical_C,T_fdm_C,diff_K") != std::string::npos);
  CHECK(invoke(with_fast({"compare", "--out", dir / "c2.csv", "--threshold-pct", "0.0001"})).code == kExitThreshold);
  CHECK(invoke(with_fast({"compare", "--out", dir / "c3.csv", "--fluence-j-cm2", "0"})).code == kExitOk);
}

TEST_CASE("sweep output is independent of the worker count") {
  TempDir dir;
  const auto base = with_fast({"sweep", "--substrate", "Copper,Si", "--fluence-j-cm2", "0.2,0.4", "--solver", "fdm"});
  auto one = base, four = base;
  one.insert(one.end(), {"--workers", "1", "--out", dir / "one.csv"});
  four.insert(four.end(), {"--workers", "4", "--out", dir / "four.csv"});
  REQUIRE(invoke(one).code == kExitOk);
  REQUIRE(invoke(four).code == kExitOk);
  CHECK(slurp(dir / "one.csv") == slurp(dir / "four.csv"));
}

TEST_CASE("sweep trends") {
  const auto fl = invoke(with_fast({"sweep", "--fluence-j-cm2", "0.2,0.4,0.6", "--solver", "analytical"}));
  REQUIRE(fl.code == kExitOk);
  const auto by_fluence = peaks_by(fl.out, 2, "analytical");
  REQUIRE(by_fluence.size() == 3);
  CHECK(by_fluence.at("0.2") < by_fluence.at("0.4"));
  CHECK(by_fluence.at("0.4") < by_fluence.at("0.6"));

  const auto fw = invoke(with_fast({"sweep", "--fwhm-ns", "20,30,40", "--solver", "analytical"}));
  REQUIRE(fw.code == kExitOk);
  const auto by_fwhm = peaks_by(fw.out, 3, "analytical");
  REQUIRE(by_fwhm.size() == 3);
  CHECK(by_fwhm.at("20") > by_fwhm.at("30"));
  CHECK(by_fwhm.at("30") > by_fwhm.at("40"));
}

TEST_CASE("sweep point cap") {
  CHECK(invoke({"sweep", "--fluence-j-cm2", "0.1,0.2,0.3", "--max-points", "2"}).code == kExitValidation);
}

TEST_CASE("config file precedence") {
  TempDir dir;
  {
    std::ofstream cfg(dir / "run.toml");
    cfg << "[run]\nsubstrate = \"Si\"\nwavelength_nm = [248]\n";
  }
  const auto from_file = invoke({"absorbance", "--config", dir / "run.toml"});
  REQUIRE(from_file.code == kExitOk);
  CHECK(from_file.out.find("Si") != std::string::npos);
  CHECK(from_file.out.find("Copper") == std::string::npos);
  const auto overridden = invoke({"absorbance", "--config", dir / "run.toml", "--substrate", "Copper"});
  REQUIRE(overridden.code == kExitOk);
  CHECK(overridden.out.find("Copper") != std::string::npos);
  CHECK(invoke({"absorbance", "--config", dir / "missing.toml"}).code == kExitValidation);
}

TEST_CASE("materials list and user material files") {
  TempDir dir;
  const auto canon = invoke({"materials", "list", "--canonical"});
  REQUIRE(canon.code == kExitOk);
  CHECK(canon.out.find("[Copper]") != std::string::npos);
  {
    std::ofstream f(dir / "glass.toml");
    f << "[Glass]\ndensity = 2500\nheat_capacity = 800\nthermal_conductivity = 1.1\n"
         "refractive_index.308 = [1.5, 0.0]\n";
  }
  const auto glass = invoke({"absorbance", "--materials-file", dir / "glass.toml", "--substrate", "Glass"});
  CHECK(glass.code == kExitOk);
  CHECK(glass.err.find("warning") != std::string::npos);
  CHECK(invoke({"materials", "list", "--materials-file", dir / "glass.toml"}).out.find("Glass") != std::string::npos);
}

TEST_CASE("csv formatting") {
  CsvTable t({"a", "b"});
  t.comment("hello");
  t.row({"1", "2"});
  CHECK(t.str() == "# hello\na,b\n1,2\n");
  CHECK(fixed(-0.0000001, 3) == "0.000");
  CHECK(fixed(2.5, 2) == "2.50");
}
