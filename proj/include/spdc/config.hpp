#ifndef SPDC_CONFIG_HPP
#define SPDC_CONFIG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spdc::cfg {

// Flat structured text: `key = value` lines grouped under `[section]`
// headers, `#` comments, duplicate keys preserved in order. Values may be
// numbers (with optional unit suffix), booleans, bare strings, lists
// `[a, b]`, or inline tables `{ k = v, ... }`.
struct Section {
  std::string name;
  std::vector<std::pair<std::string, std::string>> items;

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;            // throws ConfigError
  std::string get_or(const std::string& key, std::string def) const;
  std::vector<std::string> get_all(const std::string& key) const;
};

struct Document {
  std::vector<Section> sections; // sections[0] is the unnamed root

  bool has_section(const std::string& name) const;
  const Section& section(const std::string& name) const; // throws ConfigError
  const Section& root() const { return sections.front(); }
};

Document parse_text(const std::string& text);
Document parse_file(const std::string& path);

// "52.6 um" -> 5.26e-5; "23.95 pm/V" -> 2.395e-11; bare numbers pass through.
double parse_quantity(const std::string& text);
bool parse_bool(const std::string& text);
std::vector<double> parse_number_list(const std::string& text); // "[a, b, c]"
// "{ k = v, k2 = v2 }" -> ordered pairs
std::vector<std::pair<std::string, std::string>> parse_inline_table(const std::string& text);

std::string format_double(double v); // shortest round-trip-exact decimal
// shortest decimal that reproduces value_in_si when parsed and multiplied by
// parse_factor; keeps scaled-unit fields (e.g. lambda_nm) bit-exact
std::string format_double_scaled(double value_in_si, double parse_factor);

} // namespace spdc::cfg

#endif
