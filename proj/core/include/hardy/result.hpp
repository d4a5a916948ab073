#ifndef HARDY_RESULT_HPP
#define HARDY_RESULT_HPP

#include <string>
#include <utility>
#include <vector>

namespace hardy {

/// One asserted inequality with both sides and its tolerance, so a record is
/// auditable without rerunning the experiment.
struct Assertion {
  std::string name;
  std::string op;  // "le": lhs <= rhs + tol; "close": |lhs - rhs| <= tol
  double lhs = 0.0;
  double rhs = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct Metric {
  std::string name;
  double value = 0.0;
  bool pass = true;
};

struct ResultRecord {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Metric> metrics;
  std::vector<Assertion> assertions;
  double wall_time_ms = 0.0;

  bool all_pass() const;
  double metric(const std::string& name) const;

  void add_metric(const std::string& name, double value, bool pass = true);
  /// lhs <= rhs + tol
  void check_le(const std::string& name, double lhs, double rhs, double tol);
  /// |lhs - rhs| <= tol
  void check_close(const std::string& name, double lhs, double rhs, double tol);
};

enum class OutputFormat { json, csv };
OutputFormat parse_format(const std::string& name);

/// Deterministic serialization; numbers carry 17 significant digits so that
/// parsing reproduces the doubles bit for bit.
std::string emit_json(const ResultRecord& record);
std::string emit_csv(const ResultRecord& record);
std::string emit(const ResultRecord& record, OutputFormat format);

ResultRecord parse_json(const std::string& text);

}  // namespace hardy

#endif
