#include "lanheat/cli/csv.hpp"

#include <cstdio>
#include <fstream>

#include "lanheat/errors.hpp"

namespace lanheat::cli {

void CsvTable::row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size()) throw Error("CSV row width does not match the header");
  rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
  std::string out;
  for (const auto& c : comments_) out += "# " + c + "\n";
  const auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  emit(columns_);
  for (const auto& r : rows_) emit(r);
  return out;
}

void CsvTable::write(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << str();
  if (!f) throw Error("failed writing '" + path + "'");
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  std::string s(buf);
  if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) {
    // Avoid "-0.000" for tiny negative noise.
    if (!s.empty() && s.front() == '-') s.erase(0, 1);
  }
  return s;
}

}  // namespace lanheat::cli
