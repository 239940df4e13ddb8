#include "mcg/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mcg {

using ordered_json = nlohmann::ordered_json;

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  return std::nullopt;
}

std::string_view report_format_extension(ReportFormat f) {
  switch (f) {
    case ReportFormat::kText: return "txt";
    case ReportFormat::kJson: return "json";
    case ReportFormat::kCsv: return "csv";
  }
  return "txt";
}

namespace {

ordered_json tallies_json(const Tallies& t) {
  ordered_json out = ordered_json::object();
  for (const auto& [name, value] : t) out[name] = value;
  return out;
}

Tallies tallies_from(const ordered_json& j) {
  Tallies out;
  for (const auto& [name, value] : j.items()) out.emplace_back(name, value.get<std::int64_t>());
  return out;
}

std::string to_json(const VerificationReport& r) {
  ordered_json j;
  j["schemaVersion"] = r.schema_version;
  j["claimId"] = r.claim;
  ordered_json stages = ordered_json::array();
  for (const StageCount& s : r.stages) stages.push_back({{"stage", s.stage}, {"count", s.count}});
  j["universe"] = {{"description", r.universe}, {"stages", stages}};
  j["verdict"] = r.passed ? "pass" : "fail";
  if (r.counterexample)
    j["counterexample"] = {{"graph6", r.counterexample->graph6},
                           {"detail", r.counterexample->detail}};
  else
    j["counterexample"] = nullptr;
  j["tallies"] = tallies_json(r.tallies);
  ordered_json rows = ordered_json::array();
  for (const GraphRow& row : r.rows)
    rows.push_back({{"index", row.index},
                    {"graph6", row.graph6},
                    {"holds", row.holds},
                    {"detail", row.detail},
                    {"values", tallies_json(row.values)}});
  j["perGraph"] = rows;
  j["timing"] = {{"seconds", r.seconds}};
  return j.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "index,graph6,holds,detail\n";
  for (const GraphRow& row : r.rows)
    out << row.index << ',' << row.graph6 << ',' << (row.holds ? "true" : "false") << ','
        << csv_field(row.detail) << '\n';
  return out.str();
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "claim:    " << r.claim << '\n';
  out << "universe: " << r.universe << '\n';
  for (const StageCount& s : r.stages) {
    char line[128];
    std::snprintf(line, sizeof line, "  %-24s %12llu\n", s.stage.c_str(),
                  static_cast<unsigned long long>(s.count));
    out << line;
  }
  out << "verdict:  " << (r.passed ? "PASS" : "FAIL") << '\n';
  if (r.counterexample)
    out << "counterexample: " << r.counterexample->graph6 << "  (" << r.counterexample->detail
        << ")\n";
  out << "tallies:\n";
  for (const auto& [name, value] : r.tallies) {
    char line[128];
    std::snprintf(line, sizeof line, "  %-24s %12lld\n", name.c_str(),
                  static_cast<long long>(value));
    out << line;
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "timing:   %.3f s\n", r.seconds);
  out << timing;
  return out.str();
}

}  // namespace

std::string emit_report(const VerificationReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::kText: return to_text(r);
    case ReportFormat::kJson: return to_json(r);
    case ReportFormat::kCsv: return to_csv(r);
  }
  return {};
}

VerificationReport report_from_json(std::string_view text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    VerificationReport r;
    r.schema_version = j.at("schemaVersion").get<int>();
    if (r.schema_version != kReportSchemaVersion)
      throw std::runtime_error("unsupported report schemaVersion " +
                               std::to_string(r.schema_version));
    r.claim = j.at("claimId").get<std::string>();
    r.universe = j.at("universe").at("description").get<std::string>();
    for (const auto& s : j.at("universe").at("stages"))
      r.stages.push_back({s.at("stage").get<std::string>(), s.at("count").get<std::uint64_t>()});
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict != "pass" && verdict != "fail")
      throw std::runtime_error("unknown verdict " + verdict);
    r.passed = verdict == "pass";
    if (!j.at("counterexample").is_null())
      r.counterexample = Counterexample{j["counterexample"].at("graph6").get<std::string>(),
                                        j["counterexample"].at("detail").get<std::string>()};
    r.tallies = tallies_from(j.at("tallies"));
    for (const auto& row : j.at("perGraph"))
      r.rows.push_back({row.at("index").get<std::uint64_t>(), row.at("graph6").get<std::string>(),
                        row.at("holds").get<bool>(), row.at("detail").get<std::string>(),
                        tallies_from(row.at("values"))});
    r.seconds = j.at("timing").at("seconds").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
}

}  // namespace mcg
