#pragma once

// Minimal structured-text format shared by material files and run configs:
//
//   # comment
//   [Section]
//   key = 1.5
//   name = "text"
//   refractive_index.308 = [1.35, 1.71]
//
// Keys are bare words and may contain dots. Values are numbers, double-quoted
// strings or flat arrays of numbers.

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lanheat {

using KvValue = std::variant<double, std::string, std::vector<double>>;

struct KvEntry {
  std::string key;
  KvValue value;
  int line = 0;
};

struct KvSection {
  std::string name;  // empty for entries preceding the first header
  std::vector<KvEntry> entries;
  int line = 0;

  const KvEntry* find(std::string_view key) const;
};

struct KvDocument {
  std::vector<KvSection> sections;

  const KvSection* find(std::string_view name) const;
};

/// Throws ParseError on malformed input or duplicate keys within a section.
KvDocument parse_kv(std::string_view text);

/// Shortest decimal representation that parses back to exactly `value`.
std::string format_number(double value);

std::string read_text_file(const std::string& path);

}  // namespace lanheat
