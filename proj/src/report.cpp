#include "yangian/report.hpp"

#include <json.hpp>
#include <sstream>

#include "yangian/scalar.hpp"

namespace yangian {

namespace {

const std::string kExpectedTag = " [expected fail]";

bool ends_with(const std::string& s, const std::string& t) { return s.size() >= t.size() && s.compare(s.size() - t.size(), t.size(), t) == 0; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string clip(const std::string& s, size_t width) {
  if (s.size() <= width) return s;
  if (width <= 3) return s.substr(0, width);
  return s.substr(0, width - 3) + "...";
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Blocked: return "blocked";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "blocked") return Status::Blocked;
  fail(Error::Kind::Parse, "unknown status '" + s + "'");
}

bool SuiteReport::has_unexpected_fail() const {
  for (auto& c : checks)
    if (c.status == Status::Fail && !c.expected_fail) return true;
  return false;
}

bool SuiteReport::has_blocked() const {
  for (auto& c : checks)
    if (c.status == Status::Blocked) return true;
  return false;
}

int SuiteReport::exit_code() const {
  if (has_unexpected_fail()) return 1;
  return has_blocked() ? 2 : 0;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "table") return Format::Table;
  if (s == "csv") return Format::Csv;
  fail(Error::Kind::Parse, "unknown format '" + s + "' (json, table, csv)");
}

std::string to_json(const SuiteReport& r, int indent) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["params"] = nlohmann::ordered_json::object();
  for (auto& [k, v] : r.params) j["params"][k] = v;
  j["checks"] = nlohmann::ordered_json::array();
  for (auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.expected_fail ? c.name + kExpectedTag : c.name;
    e["status"] = status_name(c.status);
    e["witness"] = c.witness;
    e["ms"] = c.ms;
    j["checks"].push_back(std::move(e));
  }
  j["version"] = r.version;
  j["seed"] = r.seed;
  return j.dump(indent) + "\n";
}

SuiteReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Error::Kind::Parse, std::string("report json: ") + e.what());
  }
  SuiteReport r;
  r.suite = j.at("suite").get<std::string>();
  for (auto& [k, v] : j.at("params").items()) r.params[k] = v.get<std::string>();
  for (auto& e : j.at("checks")) {
    Check c;
    c.name = e.at("name").get<std::string>();
    if (ends_with(c.name, kExpectedTag)) {
      c.expected_fail = true;
      c.name.resize(c.name.size() - kExpectedTag.size());
    }
    c.status = parse_status(e.at("status").get<std::string>());
    c.witness = e.at("witness").get<std::string>();
    c.ms = e.at("ms").get<long long>();
    r.checks.push_back(std::move(c));
  }
  r.version = j.at("version").get<std::string>();
  r.seed = j.at("seed").get<uint64_t>();
  return r;
}

std::string to_table(const SuiteReport& r, size_t width) {
  std::ostringstream os;
  os << clip("suite " + r.suite + "  version " + r.version + "  seed " + std::to_string(r.seed), width) << "\n";
  std::string params;
  for (auto& [k, v] : r.params) params += (params.empty() ? "" : " ") + k + "=" + v;
  os << clip("params " + params, width) << "\n";
  for (auto& c : r.checks) {
    std::string name = c.expected_fail ? c.name + kExpectedTag : c.name;
    std::string line = std::string(status_name(c.status)) + std::string(8 - std::string(status_name(c.status)).size(), ' ') + name;
    if (!c.witness.empty()) line += "  " + c.witness;
    os << clip(line, width) << "\n";
  }
  return os.str();
}

std::string to_csv(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite,name,status,witness,ms\n";
  for (auto& c : r.checks)
    os << csv_field(r.suite) << "," << csv_field(c.expected_fail ? c.name + kExpectedTag : c.name) << "," << status_name(c.status) << ","
       << csv_field(c.witness) << "," << c.ms << "\n";
  return os.str();
}

std::string emit_report(const SuiteReport& r, Format f) {
  switch (f) {
    case Format::Json: return to_json(r);
    case Format::Table: return to_table(r);
    case Format::Csv: return to_csv(r);
  }
  return "";
}

}  // namespace yangian
