#include "pdcmode/config.hpp"

#include <array>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pdcmode/errors.hpp"

namespace pdcmode {

namespace {

constexpr std::array kKnownKeys = {
    "pump.tau_fund_ps",  "pump.beam_fwhm_mm",       "pump.lambda_nm",
    "filter.fwhm_nm",    "filter.pinhole_diameter_um", "filter.focal_mm",
    "trigger.mu_t",      "align.mu_A",              "optimize",
    "grid.n",            "grid.n_spatial",          "grid.rule",
    "chain.visibility",  "chain.tau_convention",    "chain.p_temp_override",
    "chain.p_sp_override",
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" +
                        key + "'");
    if (cfg.entries_.count(key))
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" +
                        key + "'");
    cfg.entries_[key] = value;
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

bool Config::has(const std::string& key) const { return entries_.count(key) != 0; }

const std::string& Config::raw(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end())
    throw ConfigError("missing required key '" + key + "'");
  return it->second;
}

double Config::get_double(const std::string& key) const {
  const std::string& v = raw(key);
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    throw ConfigError("key '" + key + "': '" + v + "' is not a number");
  return d;
}

long Config::get_int(const std::string& key) const {
  const std::string& v = raw(key);
  char* end = nullptr;
  const long n = std::strtol(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0')
    throw ConfigError("key '" + key + "': '" + v + "' is not an integer");
  return n;
}

bool Config::get_bool(const std::string& key) const {
  const std::string& v = raw(key);
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError("key '" + key + "': '" + v + "' is not true/false");
}

const std::string& Config::get_string(const std::string& key) const { return raw(key); }

std::optional<double> Config::maybe_double(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return get_double(key);
}

double Config::get_double_or(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

long Config::get_int_or(const std::string& key, long fallback) const {
  return has(key) ? get_int(key) : fallback;
}

bool Config::get_bool_or(const std::string& key, bool fallback) const {
  return has(key) ? get_bool(key) : fallback;
}

std::string Config::get_string_or(const std::string& key,
                                  const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

}  // namespace pdcmode
