// Serialization of check outcomes: a round-trippable text form for complex
// numbers ("re", "re+imi", "re-imi", 17 significant digits), a JSON report
// (deterministic key order and number formatting, so identical runs produce
// byte-identical files), and a flat CSV form for spreadsheets.
#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "appellcheck/catalog.hpp"
#include "appellcheck/types.hpp"

namespace appellcheck {

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format_complex(const Complex& z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string out = format_double(z.real());
  out += (z.imag() < 0.0) ? '-' : '+';
  out += format_double(std::abs(z.imag()));
  out += 'i';
  return out;
}

// Parses "1.5", "-2e-3", "0.3+0.2i", "1-0.5i", "2i", "i", "-i", "1+i".
inline Complex parse_complex(const std::string& s) {
  std::string t;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  if (t.empty()) throw std::invalid_argument("empty complex literal");
  if (t == "i" || t == "+i") return Complex(0.0, 1.0);
  if (t == "-i") return Complex(0.0, -1.0);
  const char* p = t.c_str();
  char* end = nullptr;
  double first = std::strtod(p, &end);
  if (end == p) throw std::invalid_argument("cannot parse complex literal: " + s);
  if (*end == '\0') return Complex(first, 0.0);
  if (*end == 'i' && *(end + 1) == '\0') return Complex(0.0, first);
  if (*end == '+' || *end == '-') {
    double sign = (*end == '-') ? -1.0 : 1.0;
    if (*(end + 1) == 'i' && *(end + 2) == '\0') return Complex(first, sign);
    char* end2 = nullptr;
    double second = std::strtod(end, &end2);
    if (end2 != end && *end2 == 'i' && *(end2 + 1) == '\0') {
      return Complex(first, second);
    }
  }
  throw std::invalid_argument("cannot parse complex literal: " + s);
}

inline std::string format_point(const PointMap& point) {
  std::string out;
  for (const auto& kv : point) {  // std::map iterates in key order
    if (!out.empty()) out += ';';
    out += kv.first;
    out += '=';
    out += format_complex(kv.second);
  }
  return out;
}

inline nlohmann::json outcome_to_json(const CheckOutcome& o) {
  nlohmann::json point = nlohmann::json::object();
  for (const auto& kv : o.point) point[kv.first] = format_complex(kv.second);
  // nlohmann::json objects are alphabetically keyed, hence deterministic.
  return nlohmann::json{{"id", o.id},
                        {"verdict", verdict_name(o.verdict)},
                        {"point", point},
                        {"lhs", format_complex(o.lhs)},
                        {"rhs", format_complex(o.rhs)},
                        {"predicted", format_complex(o.predicted)},
                        {"discrepancy", format_double(o.discrepancy)},
                        {"threshold", format_double(o.threshold)},
                        {"lhs_status", status_name(o.lhs_status)},
                        {"rhs_status", status_name(o.rhs_status)},
                        {"note", o.note}};
}

inline nlohmann::json report_json(const std::vector<CheckOutcome>& outcomes,
                                  const EvalConfig& cfg, std::uint64_t seed) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& o : outcomes) results.push_back(outcome_to_json(o));
  SweepSummary s = summarize(outcomes);
  return nlohmann::json{
      {"meta",
       {{"tool", "appellcheck"},
        {"seed", seed},
        {"rel_tol", format_double(cfg.rel_tol)},
        {"max_terms", cfg.max_terms},
        {"accel_depth", cfg.accel_depth},
        {"accel_base", format_double(cfg.accel_base)}}},
      {"results", results},
      {"summary",
       {{"pass", s.pass},
        {"fail", s.fail},
        {"skipped", s.skipped},
        {"error", s.error},
        {"total", s.total()}}}};
}

namespace detail {

inline std::string csv_escape(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace detail

inline std::string report_csv(const std::vector<CheckOutcome>& outcomes) {
  std::string out =
      "id,verdict,point,lhs,rhs,predicted,discrepancy,threshold,"
      "lhs_status,rhs_status,note\n";
  for (const auto& o : outcomes) {
    out += detail::csv_escape(o.id);
    out += ',';
    out += verdict_name(o.verdict);
    out += ',';
    out += detail::csv_escape(format_point(o.point));
    out += ',';
    out += detail::csv_escape(format_complex(o.lhs));
    out += ',';
    out += detail::csv_escape(format_complex(o.rhs));
    out += ',';
    out += detail::csv_escape(format_complex(o.predicted));
    out += ',';
    out += format_double(o.discrepancy);
    out += ',';
    out += format_double(o.threshold);
    out += ',';
    out += status_name(o.lhs_status);
    out += ',';
    out += status_name(o.rhs_status);
    out += ',';
    out += detail::csv_escape(o.note);
    out += '\n';
  }
  return out;
}

}  // namespace appellcheck
