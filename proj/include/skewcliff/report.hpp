#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace skewcliff {

struct Verdict {
  std::string clause;
  bool pass = false;
  std::string detail;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Result of one CLI command. Everything except timing_ms is a pure
/// function of the command, the input bytes and the flags.
struct Report {
  std::string command;
  std::string input;
  std::string input_digest;
  std::vector<Verdict> verdicts;
  nlohmann::json evidence = nlohmann::json::object();
  double timing_ms = 0.0;

  bool all_pass() const;
  /// 0 when every verdict passes, 1 otherwise.
  int exit_code() const { return all_pass() ? 0 : 1; }
};

/// Equality ignoring timing.
bool same_content(const Report& a, const Report& b);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

enum class ReportFormat { text, json };

std::string emit_report(const Report& r, ReportFormat format);

}  // namespace skewcliff
