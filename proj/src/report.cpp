#include "ppclass/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace ppclass {

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::Refuted: return "refuted";
    case ClaimStatus::Measured: return "measured";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "skipped";
}

namespace {

std::string format_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << ms;
  return os.str();
}

std::string csv_cell(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string emit_json(const std::vector<ClaimReport>& reports, bool include_runtime) {
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["claim_id"] = r.claim_id;
    j["group"] = r.group;
    j["field"] = r.field;
    j["status"] = to_string(r.status);
    j["expected"] = r.expected ? nlohmann::ordered_json(*r.expected) : nlohmann::ordered_json(nullptr);
    j["observed"] = r.observed;
    j["note"] = r.note;
    if (include_runtime) j["runtime_ms"] = r.runtime_ms;
    claims.push_back(std::move(j));
  }
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["claims"] = std::move(claims);
  return doc.dump(2) + "\n";
}

std::string emit_csv(const std::vector<ClaimReport>& reports, bool include_runtime) {
  std::ostringstream os;
  os << "claim_id,group,field,status,expected,observed,note";
  if (include_runtime) os << ",runtime_ms";
  os << "\n";
  for (const auto& r : reports) {
    os << csv_cell(r.claim_id) << ',' << csv_cell(r.group) << ',' << csv_cell(r.field) << ','
       << to_string(r.status) << ',' << csv_cell(r.expected.value_or("")) << ',' << csv_cell(r.observed) << ','
       << csv_cell(r.note);
    if (include_runtime) os << ',' << format_ms(r.runtime_ms);
    os << "\n";
  }
  return os.str();
}

std::string md_header(bool include_runtime) {
  std::string h = "| claim_id | field | status | expected | observed | note |";
  std::string rule = "|---|---|---|---|---|---|";
  if (include_runtime) {
    h += " runtime_ms |";
    rule += "---|";
  }
  return h + "\n" + rule + "\n";
}

std::string emit_markdown(const std::vector<ClaimReport>& reports, bool include_runtime) {
  std::ostringstream os;
  if (reports.empty()) return md_header(include_runtime);
  // groups in first-seen order
  std::vector<std::string> groups;
  for (const auto& r : reports) {
    if (std::find(groups.begin(), groups.end(), r.group) == groups.end()) groups.push_back(r.group);
  }
  bool first = true;
  for (const auto& g : groups) {
    if (!first) os << "\n";
    first = false;
    os << "## " << g << "\n\n" << md_header(include_runtime);
    for (const auto& r : reports) {
      if (r.group != g) continue;
      os << "| " << md_cell(r.claim_id) << " | " << md_cell(r.field) << " | " << to_string(r.status) << " | "
         << md_cell(r.expected.value_or("")) << " | " << md_cell(r.observed) << " | " << md_cell(r.note) << " |";
      if (include_runtime) os << ' ' << format_ms(r.runtime_ms) << " |";
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace

std::string emit_report(const std::vector<ClaimReport>& reports, ReportFormat format, bool include_runtime) {
  switch (format) {
    case ReportFormat::Json: return emit_json(reports, include_runtime);
    case ReportFormat::Csv: return emit_csv(reports, include_runtime);
    case ReportFormat::Markdown: return emit_markdown(reports, include_runtime);
  }
  return {};
}

}  // namespace ppclass
