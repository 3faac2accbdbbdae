#pragma once

#include <string>
#include <vector>

namespace lanheat::cli {

/// Comma-separated table with '#'-prefixed comment header and LF line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void comment(const std::string& line) { comments_.push_back(line); }
  void comments(const std::vector<std::string>& lines) { comments_.insert(comments_.end(), lines.begin(), lines.end()); }
  /// Throws Error when the row width differs from the header.
  void row(std::vector<std::string> cells);

  std::string str() const;
  /// Throws Error when the file cannot be written.
  void write(const std::string& path) const;

  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> columns_;
  std::vector<std::string> comments_;
  std::vector<std::vector<std::string>> rows_;
};

/// printf-style fixed formatting used for every numeric CSV cell.
std::string fixed(double value, int digits);

}  // namespace lanheat::cli
