#include "hardy/result.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace hardy {

bool ResultRecord::all_pass() const {
  for (const auto& m : metrics) {
    if (!m.pass) return false;
  }
  for (const auto& a : assertions) {
    if (!a.pass) return false;
  }
  return true;
}

double ResultRecord::metric(const std::string& name) const {
  for (const auto& m : metrics) {
    if (m.name == name) return m.value;
  }
  throw std::out_of_range("no metric named " + name);
}

void ResultRecord::add_metric(const std::string& name, double value, bool pass) {
  metrics.push_back(Metric{name, value, pass});
}

void ResultRecord::check_le(const std::string& name, double lhs, double rhs, double tol) {
  assertions.push_back(Assertion{name, "le", lhs, rhs, tol, lhs <= rhs + tol});
}

void ResultRecord::check_close(const std::string& name, double lhs, double rhs, double tol) {
  assertions.push_back(Assertion{name, "close", lhs, rhs, tol, std::abs(lhs - rhs) <= tol});
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format '" + name + "' (expected json or csv)");
}

namespace {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string emit_json(const ResultRecord& r) {
  std::string out = "{";
  out += "\"experiment\": \"" + json_escape(r.experiment) + "\", ";
  out += "\"inputs\": {";
  for (size_t i = 0; i < r.inputs.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + json_escape(r.inputs[i].first) + "\": \"" + json_escape(r.inputs[i].second) + "\"";
  }
  out += "}, ";
  out += "\"metrics\": {";
  for (size_t i = 0; i < r.metrics.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + json_escape(r.metrics[i].name) + "\": " + format_number(r.metrics[i].value);
  }
  out += "}, ";
  out += "\"assertions\": [";
  for (size_t i = 0; i < r.assertions.size(); ++i) {
    const Assertion& a = r.assertions[i];
    if (i) out += ", ";
    out += "{\"name\": \"" + json_escape(a.name) + "\", \"op\": \"" + a.op + "\", \"lhs\": " +
           format_number(a.lhs) + ", \"rhs\": " + format_number(a.rhs) + ", \"tol\": " +
           format_number(a.tol) + ", \"pass\": " + (a.pass ? "true" : "false") + "}";
  }
  out += "], ";
  out += "\"wall_time_ms\": " + format_number(r.wall_time_ms);
  out += "}\n";
  return out;
}

std::string emit_csv(const ResultRecord& r) {
  std::string out = "experiment,metric,value,pass\n";
  for (const auto& m : r.metrics) {
    out += r.experiment + "," + m.name + "," + format_number(m.value) + "," +
           (m.pass ? "true" : "false") + "\n";
  }
  return out;
}

std::string emit(const ResultRecord& r, OutputFormat format) {
  return format == OutputFormat::json ? emit_json(r) : emit_csv(r);
}

ResultRecord parse_json(const std::string& text) {
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  ResultRecord r;
  r.experiment = j.at("experiment").get<std::string>();
  for (const auto& [key, value] : j.at("inputs").items()) {
    r.inputs.emplace_back(key, value.get<std::string>());
  }
  for (const auto& [key, value] : j.at("metrics").items()) {
    r.metrics.push_back(Metric{key, value.get<double>(), true});
  }
  for (const auto& a : j.at("assertions")) {
    r.assertions.push_back(Assertion{a.at("name").get<std::string>(), a.at("op").get<std::string>(),
                                     a.at("lhs").get<double>(), a.at("rhs").get<double>(),
                                     a.at("tol").get<double>(), a.at("pass").get<bool>()});
  }
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  return r;
}

}  // namespace hardy
