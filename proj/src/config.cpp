#include "spdc/config.hpp"

#include "spdc/error.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace spdc::cfg {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string strip_comment(const std::string& line) {
  bool in_brace = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '{' || line[i] == '[') in_brace = true;
    if (line[i] == '}' || line[i] == ']') in_brace = false;
    if (line[i] == '#' && !in_brace) return line.substr(0, i);
  }
  return line;
}

const std::map<std::string, double>& unit_table() {
  static const std::map<std::string, double> units = {
      {"m", 1.0},        {"cm", 1e-2},     {"mm", 1e-3},    {"um", 1e-6},
      {"µm", 1e-6}, {"nm", 1e-9},     {"pm", 1e-12},   {"km", 1e3},
      {"s", 1.0},        {"ms", 1e-3},     {"us", 1e-6},    {"ns", 1e-9},
      {"ps", 1e-12},     {"fs", 1e-15},    {"W", 1.0},      {"mW", 1e-3},
      {"uW", 1e-6},      {"nW", 1e-9},     {"kW", 1e3},     {"Hz", 1.0},
      {"kHz", 1e3},      {"MHz", 1e6},     {"GHz", 1e9},    {"THz", 1e12},
      {"pm/V", 1e-12},   {"nm/V", 1e-9},   {"K", 1.0},      {"rad", 1.0},
      {"rad/s", 1.0},    {"1/m", 1.0},     {"1/s", 1.0},    {"s2/m", 1.0},
      {"deg", 3.14159265358979323846 / 180.0},
  };
  return units;
}

} // namespace

bool Section::has(const std::string& key) const {
  for (const auto& [k, v] : items)
    if (k == key) return true;
  return false;
}

const std::string& Section::get(const std::string& key) const {
  for (const auto& [k, v] : items)
    if (k == key) return v;
  fail(Err::ConfigError, "missing key '" + key + "'" +
                             (name.empty() ? "" : " in section [" + name + "]"));
}

std::string Section::get_or(const std::string& key, std::string def) const {
  for (const auto& [k, v] : items)
    if (k == key) return v;
  return def;
}

std::vector<std::string> Section::get_all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : items)
    if (k == key) out.push_back(v);
  return out;
}

bool Document::has_section(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return true;
  return false;
}

const Section& Document::section(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return s;
  fail(Err::ConfigError, "missing section [" + name + "]");
}

Document parse_text(const std::string& text) {
  Document doc;
  doc.sections.push_back(Section{});
  Section* current = &doc.sections.back();

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      doc.sections.push_back(Section{trim(line.substr(1, line.size() - 2)), {}});
      current = &doc.sections.back();
      continue;
    }
    const size_t eq = line.find('=');
    require(eq != std::string::npos, Err::ConfigError,
            "line " + std::to_string(lineno) + ": expected 'key = value'");
    current->items.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return doc;
}

Document parse_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::ConfigError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

double parse_quantity(const std::string& text) {
  const std::string t = trim(text);
  require(!t.empty(), Err::ConfigError, "empty numeric value");
  const char* begin = t.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  require(end != begin, Err::ConfigError, "not a number: '" + t + "'");
  std::string suffix = trim(std::string(end));
  if (suffix.empty()) return v;
  const auto& units = unit_table();
  const auto it = units.find(suffix);
  require(it != units.end(), Err::ConfigError, "unknown unit '" + suffix + "' in '" + t + "'");
  return v * it->second;
}

bool parse_bool(const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "yes" || t == "1") return true;
  if (t == "false" || t == "no" || t == "0") return false;
  fail(Err::ConfigError, "not a boolean: '" + t + "'");
}

std::vector<double> parse_number_list(const std::string& text) {
  std::string t = trim(text);
  require(t.size() >= 2 && t.front() == '[' && t.back() == ']', Err::ConfigError,
          "expected list '[...]', got '" + t + "'");
  t = t.substr(1, t.size() - 2);
  std::vector<double> out;
  std::string item;
  std::istringstream in(t);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_quantity(item));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_inline_table(const std::string& text) {
  std::string t = trim(text);
  require(t.size() >= 2 && t.front() == '{' && t.back() == '}', Err::ConfigError,
          "expected inline table '{...}', got '" + t + "'");
  t = t.substr(1, t.size() - 2);
  std::vector<std::pair<std::string, std::string>> out;
  std::string item;
  std::istringstream in(t);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const size_t eq = item.find('=');
    require(eq != std::string::npos, Err::ConfigError, "inline table entry needs '='");
    out.emplace_back(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
  }
  return out;
}

std::string format_double(double v) {
  // Shortest representation that parses back to the same double.
  char buf[40];
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_double_scaled(double value_in_si, double parse_factor) {
  // Shortest decimal t with strtod(t) * parse_factor bit-identical to
  // value_in_si, so files storing scaled units round-trip exactly.
  char buf[40];
  const double display = value_in_si / parse_factor;
  const double candidates[3] = {display, std::nextafter(display, 0.0),
                                std::nextafter(display, std::numeric_limits<double>::infinity())};
  for (double cand : candidates) {
    if (cand == std::floor(cand) && std::abs(cand) < 1e15) {
      std::snprintf(buf, sizeof buf, "%.0f", cand);
      if (std::strtod(buf, nullptr) * parse_factor == value_in_si) return buf;
    }
    for (int prec = 1; prec <= 17; ++prec) {
      std::snprintf(buf, sizeof buf, "%.*g", prec, cand);
      if (std::strtod(buf, nullptr) * parse_factor == value_in_si) return buf;
    }
  }
  std::snprintf(buf, sizeof buf, "%.17g", display);
  return buf;
}

} // namespace spdc::cfg
