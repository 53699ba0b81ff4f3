#pragma once

#include <map>
#include <optional>
#include <string>

namespace pdcmode {

// Plain `key = value` configuration, one entry per line, `#` comments.
// Keys are dotted and validated against the known set at parse time;
// unknown keys are rejected with their line number.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text);

  bool has(const std::string& key) const;
  double get_double(const std::string& key) const;
  long get_int(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  const std::string& get_string(const std::string& key) const;

  std::optional<double> maybe_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  long get_int_or(const std::string& key, long fallback) const;
  bool get_bool_or(const std::string& key, bool fallback) const;
  std::string get_string_or(const std::string& key, const std::string& fallback) const;

 private:
  const std::string& raw(const std::string& key) const;  // throws ConfigError
  std::map<std::string, std::string> entries_;
};

}  // namespace pdcmode
