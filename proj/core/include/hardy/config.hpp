#ifndef HARDY_CONFIG_HPP
#define HARDY_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hardy {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat key = value configuration with dotted keys, one entry per line.
/// '#' starts a comment.  Piecewise-constant tables use "angle:value"
/// pairs separated by commas, e.g.  exponent.p = 0:4, 3.1415926:2
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text);

  bool has(const std::string& key) const;
  const std::string& get_string(const std::string& key) const;
  std::string get_string_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  long get_int(const std::string& key) const;
  long get_int_or(const std::string& key, long fallback) const;
  uint64_t get_u64(const std::string& key) const;

  /// Sorted (angle, value) pairs of a piecewise-constant table.
  std::vector<std::pair<double, double>> get_table(const std::string& key) const;

  void set(const std::string& key, const std::string& value);
  const std::vector<std::pair<std::string, std::string>>& items() const { return kv_; }

 private:
  const std::string* find(const std::string& key) const;
  std::vector<std::pair<std::string, std::string>> kv_;
};

}  // namespace hardy

#endif
