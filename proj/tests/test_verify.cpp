#include <gtest/gtest.h>

#include <json.hpp>

#include "oigraph/ff.hpp"
#include "oigraph/verify.hpp"

using namespace oigraph;

namespace {

std::vector<CheckRecord> run(int id) {
  VerifyOptions opts;
  return run_criterion(id, opts);
}

bool all_pass(const std::vector<CheckRecord>& records) {
  for (const auto& r : records) {
    if (r.status == CheckStatus::fail) return false;
  }
  return !records.empty();
}

}  // namespace

TEST(Verify, StatusStrings) {
  EXPECT_EQ(to_string(CheckStatus::pass), "pass");
  EXPECT_EQ(to_string(CheckStatus::fail), "fail");
  EXPECT_EQ(to_string(CheckStatus::outside_coverage), "outside-paper-coverage");
}

TEST(Verify, UnknownSuiteThrows) {
  VerifyOptions opts;
  opts.suite = "nightly";
  EXPECT_THROW(run_verify(opts), Error);
  EXPECT_THROW(run_criterion(12, opts), Error);
}

TEST(Verify, CheapCriteriaPass) {
  for (int id : {2, 3, 6, 7, 8, 9}) EXPECT_TRUE(all_pass(run(id))) << criterion_title(id);
}

TEST(Verify, EdgeRuleFindingIsOutsideCoverage) {
  const auto records = run(11);
  bool finding = false;
  for (const auto& r : records) {
    EXPECT_EQ(r.criterion, 11);
    finding = finding || r.status == CheckStatus::outside_coverage;
  }
  EXPECT_TRUE(finding);
  EXPECT_TRUE(all_pass(records));
}

TEST(Verify, ReportSerialisation) {
  VerifyReport report;
  report.suite = "core";
  report.records = run(3);
  ASSERT_FALSE(report.records.empty());
  const auto j = nlohmann::json::parse(report.to_json());
  EXPECT_EQ(j.at("suite"), "core");
  EXPECT_EQ(j.at("checks").size(), report.records.size());
  EXPECT_EQ(report.criteria(), std::vector<int>{3});
  EXPECT_TRUE(report.criterion_passed(3));
  const std::string csv = report.to_csv();
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  EXPECT_EQ(lines, report.records.size() + 1);
  EXPECT_EQ(report.to_csv(false).find("criterion,"), std::string::npos);
  report.records.front().status = CheckStatus::fail;
  EXPECT_FALSE(report.ok());
  EXPECT_FALSE(report.criterion_passed(3));
}
