#include "hardy/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hardy {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& key, const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid config field '" + key + "': expected a number, got '" + text + "'");
  }
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_string(buffer.str());
}

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + " has no '='");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) + " has an empty key");
    }
    cfg.set(key, value);
  }
  return cfg;
}

void Config::set(const std::string& key, const std::string& value) {
  for (auto& kv : kv_) {
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  }
  kv_.emplace_back(key, value);
}

const std::string* Config::find(const std::string& key) const {
  for (const auto& kv : kv_) {
    if (kv.first == key) return &kv.second;
  }
  return nullptr;
}

bool Config::has(const std::string& key) const { return find(key) != nullptr; }

const std::string& Config::get_string(const std::string& key) const {
  const std::string* v = find(key);
  if (!v) throw ConfigError("missing config field '" + key + "'");
  return *v;
}

std::string Config::get_string_or(const std::string& key, const std::string& fallback) const {
  const std::string* v = find(key);
  return v ? *v : fallback;
}

double Config::get_double(const std::string& key) const {
  return parse_number(key, get_string(key));
}

double Config::get_double_or(const std::string& key, double fallback) const {
  const std::string* v = find(key);
  return v ? parse_number(key, *v) : fallback;
}

long Config::get_int(const std::string& key) const {
  const double v = get_double(key);
  if (std::floor(v) != v) throw ConfigError("invalid config field '" + key + "': expected an integer");
  return static_cast<long>(v);
}

long Config::get_int_or(const std::string& key, long fallback) const {
  return has(key) ? get_int(key) : fallback;
}

uint64_t Config::get_u64(const std::string& key) const {
  const std::string& s = get_string(key);
  try {
    size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return static_cast<uint64_t>(v);
  } catch (const std::exception&) {
    throw ConfigError("invalid config field '" + key + "': expected an unsigned integer");
  }
}

std::vector<std::pair<double, double>> Config::get_table(const std::string& key) const {
  const std::string& s = get_string(key);
  std::vector<std::pair<double, double>> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ConfigError("invalid config field '" + key + "': expected angle:value pairs");
    }
    const double angle = parse_number(key, trim(item.substr(0, colon)));
    const double value = parse_number(key, trim(item.substr(colon + 1)));
    out.emplace_back(angle, value);
  }
  if (out.empty()) throw ConfigError("invalid config field '" + key + "': empty table");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hardy
