#pragma once
// Verification suites behind `verify <suite>`.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yangian/report.hpp"

namespace yangian {

struct SuiteParams {
  std::map<std::string, std::string> values;  // shift, mu1, mu2, mu3, bound, order, n, k, l, sp, count, type, rank
  uint64_t seed = 1;
  unsigned jobs = 0;    // 0: available parallelism
  bool timing = false;  // record wall-clock ms; off keeps reports byte-identical

  bool has(const std::string& key) const { return values.count(key) > 0; }
  std::optional<std::string> get(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  std::vector<int> get_ints(const std::string& key, std::vector<int> fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

SuiteReport run_suite(const std::string& name, const SuiteParams& params);

// runs the tasks on a worker pool and returns their checks in task order
std::vector<Check> run_checks(const std::vector<std::function<std::vector<Check>()>>& tasks, unsigned jobs, bool timing);

}  // namespace yangian
