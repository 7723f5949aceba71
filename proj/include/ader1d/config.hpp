#ifndef ADER1D_CONFIG_HPP
#define ADER1D_CONFIG_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ader1d/errors.hpp"
#include "ader1d/schemes.hpp"

namespace ader1d {

// Declarative run description: `key = value` lines, `#` comments, optional
// `[section]` headers that prefix keys as `section.key`. See the README for
// the full key list.
class Config {
public:
  static Config from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str());
  }

  static Config from_string(const std::string& text) {
    Config cfg;
    std::stringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const std::string trimmed = trim(line);
      if (trimmed.empty()) continue;
      if (trimmed.front() == '[') {
        if (trimmed.back() != ']')
          throw ConfigError("config line " + std::to_string(lineno) + ": malformed section");
        section = trim(trimmed.substr(1, trimmed.size() - 2));
        continue;
      }
      const auto eq = trimmed.find('=');
      if (eq == std::string::npos)
        throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
      std::string key = trim(trimmed.substr(0, eq));
      const std::string value = trim(trimmed.substr(eq + 1));
      if (key.empty() || value.empty())
        throw ConfigError("config line " + std::to_string(lineno) + ": empty key or value");
      if (!section.empty()) key = section + "." + key;
      cfg.values_[key] = value;
    }
    return cfg;
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing config key '" + key + "'");
    return it->second;
  }
  std::string get(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

  double get_double(const std::string& key) const { return to_double(key, get(key)); }
  double get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
  }
  int get_int(const std::string& key) const {
    const double v = get_double(key);
    const int i = static_cast<int>(v);
    if (i != v) throw ConfigError("config key '" + key + "' must be an integer");
    return i;
  }
  int get_int(const std::string& key, int fallback) const {
    return has(key) ? get_int(key) : fallback;
  }

  std::vector<int> get_int_list(const std::string& key) const {
    std::vector<int> out;
    std::stringstream ss(get(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::string t = trim(item);
      if (t.empty()) continue;
      out.push_back(static_cast<int>(to_double(key, t)));
    }
    if (out.empty()) throw ConfigError("config key '" + key + "' holds no values");
    return out;
  }

  std::vector<std::string> get_list(const std::string& key) const {
    std::vector<std::string> out;
    std::stringstream ss(get(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::string t = trim(item);
      if (!t.empty()) out.push_back(t);
    }
    if (out.empty()) throw ConfigError("config key '" + key + "' holds no values");
    return out;
  }

private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }
  static double to_double(const std::string& key, const std::string& v) {
    try {
      std::size_t pos = 0;
      const double d = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return d;
    } catch (const std::exception&) {
      throw ConfigError("config key '" + key + "': cannot parse number '" + v + "'");
    }
  }

  std::map<std::string, std::string> values_;
};

inline SchemeType parse_scheme(const std::string& name) {
  if (name == "FV+GRPrec" || name == "grprec") return SchemeType::fv_grprec;
  if (name == "FV+GRPrecNL" || name == "grprec-nl") return SchemeType::fv_grprec_nl;
  if (name == "FV+WENO-DK" || name == "weno-dk") return SchemeType::fv_weno_dk;
  if (name == "DG" || name == "dg") return SchemeType::dg;
  throw ConfigError("unknown scheme '" + name +
                    "' (expected FV+GRPrec, FV+GRPrecNL, FV+WENO-DK or DG)");
}

inline BootstrapMethod parse_bootstrap(const std::string& name) {
  if (name == "weno-dk") return BootstrapMethod::weno_dk;
  if (name == "central-linear") return BootstrapMethod::central_linear;
  throw ConfigError("unknown bootstrap method '" + name +
                    "' (expected weno-dk or central-linear)");
}

}  // namespace ader1d

#endif
