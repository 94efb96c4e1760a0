#pragma once
// Suite reports and their json / table / csv renderings.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace yangian {

inline constexpr const char* kEngineVersion = "0.4.0";

enum class Status { Pass, Fail, Blocked };

const char* status_name(Status s);
Status parse_status(const std::string& s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string witness;
  long long ms = 0;
  bool expected_fail = false;  // known counterexample; encoded in the name
};

struct SuiteReport {
  std::string suite;
  std::map<std::string, std::string> params;
  std::vector<Check> checks;
  std::string version = kEngineVersion;
  uint64_t seed = 0;

  bool has_unexpected_fail() const;
  bool has_blocked() const;
  // 0: agreement, 1: an unexpected fail, 2: blocked checks and no unexpected fail
  int exit_code() const;
};

enum class Format { Json, Table, Csv };
Format parse_format(const std::string& s);

std::string to_json(const SuiteReport& r, int indent = 2);  // indent < 0: one line
SuiteReport report_from_json(const std::string& text);
std::string to_table(const SuiteReport& r, size_t width = 120);
std::string to_csv(const SuiteReport& r);
std::string emit_report(const SuiteReport& r, Format f);

}  // namespace yangian
