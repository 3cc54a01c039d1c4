#include "skewcliff/report.hpp"

#include <cstdio>

#include "skewcliff/error.hpp"

namespace skewcliff {

using nlohmann::json;

bool Report::all_pass() const {
  for (const auto& v : verdicts)
    if (!v.pass) return false;
  return true;
}

bool same_content(const Report& a, const Report& b) {
  return a.command == b.command && a.input == b.input && a.input_digest == b.input_digest &&
         a.verdicts == b.verdicts && a.evidence == b.evidence;
}

json to_json(const Report& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back({{"clause", v.clause}, {"pass", v.pass}, {"detail", v.detail}});
  return {{"command", r.command},
          {"input", r.input},
          {"input_digest", r.input_digest},
          {"verdicts", verdicts},
          {"evidence", r.evidence},
          {"timing_ms", r.timing_ms}};
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.input_digest = j.at("input_digest").get<std::string>();
    for (const auto& v : j.at("verdicts")) {
      r.verdicts.push_back({v.at("clause").get<std::string>(), v.at("pass").get<bool>(), v.at("detail").get<std::string>()});
    }
    r.evidence = j.at("evidence");
    r.timing_ms = j.at("timing_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

namespace {

void flatten(const json& value, const std::string& prefix, std::string& out) {
  if (value.is_object() && !value.empty()) {
    for (const auto& [key, child] : value.items()) flatten(child, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  out += prefix + ": ";
  out += value.is_string() ? value.get<std::string>() : value.dump();
  out += "\n";
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::json) return to_json(r).dump(2) + "\n";
  std::string out;
  out += "command: " + r.command + "\n";
  out += "input: " + r.input + "\n";
  out += "input_digest: " + r.input_digest + "\n";
  for (const auto& v : r.verdicts) {
    out += (v.pass ? "PASS " : "FAIL ") + v.clause;
    if (!v.detail.empty()) out += ": " + v.detail;
    out += "\n";
  }
  flatten(r.evidence, "evidence", out);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", r.timing_ms);
  out += std::string("timing_ms: ") + buf + "\n";
  return out;
}

}  // namespace skewcliff
