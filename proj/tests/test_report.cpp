#include <gtest/gtest.h>

#include "yangian/scalar.hpp"
#include "yangian/suites.hpp"

using namespace yangian;

namespace {

SuiteReport sample() {
  SuiteReport r;
  r.suite = "toda";
  r.params = {{"n", "3"}, {"order", "2"}};
  r.seed = 9;
  r.checks.push_back({"a", Status::Pass, "", 0, false});
  r.checks.push_back({"b, with comma", Status::Fail, std::string(300, 'x'), 12, false});
  r.checks.push_back({"c", Status::Fail, "w \"quoted\"", 0, true});
  r.checks.push_back({"d", Status::Blocked, "residual", 0, false});
  return r;
}

SuiteParams params(std::map<std::string, std::string> v) {
  SuiteParams p;
  p.values = std::move(v);
  return p;
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  auto r = sample();
  auto text = to_json(r);
  auto back = report_from_json(text);
  EXPECT_EQ(to_json(back), text);
  EXPECT_TRUE(back.checks[2].expected_fail);
  EXPECT_EQ(back.checks[1].status, Status::Fail);
  EXPECT_EQ(to_json(report_from_json(to_json(r, -1))), text);
}

TEST(Report, JsonKeyOrder) {
  auto text = to_json(sample(), -1);
  auto at = [&](const std::string& k) { return text.find("\"" + k + "\""); };
  EXPECT_LT(at("suite"), at("params"));
  EXPECT_LT(at("params"), at("checks"));
  EXPECT_LT(at("checks"), at("version"));
  EXPECT_LT(at("version"), at("seed"));
  EXPECT_LT(at("name"), at("status"));
  EXPECT_LT(at("status"), at("witness"));
  EXPECT_LT(at("witness"), at("ms"));
}

TEST(Report, TableTruncatesWithEllipsis) {
  auto table = to_table(sample());
  size_t start = 0;
  bool clipped = false;
  while (start < table.size()) {
    size_t end = table.find('\n', start);
    std::string line = table.substr(start, end - start);
    EXPECT_LE(line.size(), 120u);
    if (line.size() == 120 && line.substr(117) == "...") clipped = true;
    start = end + 1;
  }
  EXPECT_TRUE(clipped);
}

TEST(Report, CsvOneRowPerCheck) {
  auto csv = to_csv(sample());
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_NE(csv.find("\"b, with comma\""), std::string::npos);
  EXPECT_NE(csv.find("\"w \"\"quoted\"\"\""), std::string::npos);
}

TEST(Report, ExitCodes) {
  auto r = sample();
  EXPECT_EQ(r.exit_code(), 1);
  r.checks.erase(r.checks.begin() + 1);
  EXPECT_EQ(r.exit_code(), 2);
  r.checks.pop_back();
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Suites, UnknownSuiteAndMalformedParams) {
  EXPECT_THROW(run_suite("unknown", SuiteParams{}), Error);
  EXPECT_THROW(run_suite("toda", params({{"n", "three"}})), Error);
}

TEST(Suites, TodaThreeSitesAllPass) {
  auto r = run_suite("toda", params({{"n", "3"}}));
  EXPECT_EQ(r.exit_code(), 0);
  for (auto& c : r.checks) EXPECT_EQ(c.status, Status::Pass) << c.name << " " << c.witness;
}

TEST(Suites, DominantCoassocCounterexampleIsExpected) {
  auto r = run_suite("coassoc", params({{"shift", "0,2,0"}}));
  size_t fails = 0;
  for (auto& c : r.checks)
    if (c.status == Status::Fail) {
      ++fails;
      EXPECT_TRUE(c.expected_fail);
      EXPECT_FALSE(c.witness.empty());
    }
  EXPECT_GE(fails, 1u);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Suites, ReportsAreByteIdentical) {
  auto p = params({{"n", "2"}});
  p.seed = 5;
  EXPECT_EQ(to_json(run_suite("toda", p)), to_json(run_suite("toda", p)));
  auto z = params({{"count", "10"}});
  z.jobs = 3;
  EXPECT_EQ(to_json(run_suite("zastava", z)), to_json(run_suite("zastava", z)));
}

TEST(Suites, HilbertOracles) {
  auto r = run_suite("hilbert", params({}));
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].status, Status::Pass);
  EXPECT_NE(r.checks[0].witness.find("1,3,9,22"), std::string::npos);
  auto a2 = run_suite("hilbert", params({{"rank", "2"}, {"order", "2"}}));
  EXPECT_EQ(a2.checks[0].status, Status::Pass) << a2.checks[0].witness;
}
