#include "lanheat/keyvalue.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "lanheat/errors.hpp"

namespace lanheat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Drops a trailing '#' comment that is not inside a string literal.
std::string_view strip_comment(std::string_view line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_string && c == '\\') {
      ++i;
    } else if (c == '"') {
      in_string = !in_string;
    } else if (c == '#' && !in_string) {
      return line.substr(0, i);
    }
  }
  return line;
}

bool valid_key(std::string_view key) {
  if (key.empty()) return false;
  for (char c : key) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-')) return false;
  }
  return true;
}

double parse_double(std::string_view text, int line) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("invalid number '" + std::string(text) + "'", line);
  }
  return value;
}

std::string parse_string(std::string_view text, int line) {
  std::string out;
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    char c = text[i];
    if (c == '\\') {
      if (i + 2 >= text.size()) throw ParseError("dangling escape in string", line);
      c = text[++i];
      if (c == 'n') c = '\n';
      else if (c == 't') c = '\t';
      else if (c != '"' && c != '\\') throw ParseError("unsupported escape in string", line);
    } else if (c == '"') {
      throw ParseError("unexpected quote inside string", line);
    }
    out.push_back(c);
  }
  return out;
}

KvValue parse_value(std::string_view text, int line) {
  text = trim(text);
  if (text.empty()) throw ParseError("missing value", line);
  if (text.front() == '"') {
    if (text.size() < 2 || text.back() != '"') throw ParseError("unterminated string", line);
    return parse_string(text, line);
  }
  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated array", line);
    std::vector<double> values;
    std::string_view body = trim(text.substr(1, text.size() - 2));
    while (!body.empty()) {
      const auto comma = body.find(',');
      values.push_back(parse_double(body.substr(0, comma), line));
      if (comma == std::string_view::npos) break;
      body = trim(body.substr(comma + 1));
      if (body.empty()) throw ParseError("trailing comma in array", line);
    }
    return values;
  }
  return parse_double(text, line);
}

}  // namespace

const KvEntry* KvSection::find(std::string_view key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

const KvSection* KvDocument::find(std::string_view name) const {
  for (const auto& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

KvDocument parse_kv(std::string_view text) {
  KvDocument doc;
  doc.sections.push_back(KvSection{"", {}, 0});
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated section header", line_no);
      std::string_view name = trim(line.substr(1, line.size() - 2));
      if (!valid_key(name)) throw ParseError("invalid section name '" + std::string(name) + "'", line_no);
      if (doc.find(name) != nullptr) throw ParseError("duplicate section '" + std::string(name) + "'", line_no);
      doc.sections.push_back(KvSection{std::string(name), {}, line_no});
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no);
    std::string_view key = trim(line.substr(0, eq));
    if (!valid_key(key)) throw ParseError("invalid key '" + std::string(key) + "'", line_no);
    auto& section = doc.sections.back();
    if (section.find(key) != nullptr) throw ParseError("duplicate key '" + std::string(key) + "'", line_no);
    section.entries.push_back(KvEntry{std::string(key), parse_value(line.substr(eq + 1), line_no), line_no});
  }
  if (doc.sections.front().entries.empty()) doc.sections.erase(doc.sections.begin());
  return doc;
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw Error("cannot format number");
  return std::string(buf.data(), ptr);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lanheat
