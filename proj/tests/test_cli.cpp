#include "cli_harness.hpp"

#include <cmath>
#include <cstdlib>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

using qbell_test::CsvRow;
using qbell_test::parse_csv;
using qbell_test::run_cli;

double as_double(const CsvRow& row, const std::string& key) {
  return std::strtod(row.at(key).c_str(), nullptr);
}

TEST(CliTest, CorrelationsAtFullVisibility) {
  const auto run = run_cli("correlations --v 1");
  ASSERT_EQ(run.exit_code, 0);
  const auto rows = parse_csv(run.out);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0].at("name"), "corr-xx");
  EXPECT_NEAR(as_double(rows[0], "value"), 0.0, 1e-12);
  EXPECT_NEAR(as_double(rows[1], "value"), 1.0, 1e-12);
  EXPECT_NEAR(as_double(rows[2], "value"), 1.0, 1e-12);
  EXPECT_NEAR(as_double(rows[3], "value"), 0.0, 1e-12);
  EXPECT_EQ(rows[4].at("name"), "chsh-1");
  EXPECT_NEAR(as_double(rows[4], "value"), 2.0, 1e-12);
  EXPECT_NEAR(as_double(rows[5], "value"), 0.0, 1e-12);
  EXPECT_NEAR(as_double(rows[6], "value"), 0.0, 1e-12);
  EXPECT_NEAR(as_double(rows[7], "value"), 2.0, 1e-12);
  for (const auto& row : rows) {
    EXPECT_EQ(row.at("violated"), "false");
  }
}

TEST(CliTest, CorrelationsAtZeroVisibility) {
  const auto run = run_cli("correlations --v 0");
  ASSERT_EQ(run.exit_code, 0);
  for (const auto& row : parse_csv(run.out)) {
    EXPECT_NEAR(as_double(row, "value"), 0.0, 1e-12);
  }
}

TEST(CliTest, CorrelationsMidVisibility) {
  const auto run = run_cli("correlations --v 0.85");
  ASSERT_EQ(run.exit_code, 0);
  const auto rows = parse_csv(run.out);
  EXPECT_NEAR(as_double(rows[1], "value"), 0.85, 1e-12);
  EXPECT_NEAR(as_double(rows[4], "value"), 1.7, 1e-12);
}

TEST(CliTest, ThresholdsTable) {
  const auto run = run_cli("thresholds --max-n 4");
  ASSERT_EQ(run.exit_code, 0);
  const auto rows = parse_csv(run.out);
  ASSERT_EQ(rows.size(), 5u);
  const double expected[] = {1.1463, 0.96394, 0.90983, 0.88393};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(rows[i].at("n"), std::to_string(i + 1));
    EXPECT_NEAR(as_double(rows[i], "threshold"), expected[i], 1e-4);
    EXPECT_EQ(rows[i].at("violation_possible"), i == 0 ? "false" : "true");
  }
  EXPECT_EQ(rows[4].at("n"), "asymptote");
  EXPECT_GT(as_double(rows[4], "threshold"), 0.81);
}

TEST(CliTest, ThresholdsSingleRow) {
  const auto run = run_cli("thresholds --max-n 1");
  ASSERT_EQ(run.exit_code, 0);
  const auto rows = parse_csv(run.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].at("violation_possible"), "false");
}

TEST(CliTest, ScanFindsThresholdFlip) {
  const auto run = run_cli("scan --n 2 --v-from 0.9 --v-to 1.0 --steps 11");
  ASSERT_EQ(run.exit_code, 0);
  const auto rows = parse_csv(run.out);
  ASSERT_EQ(rows.size(), 33u);
  bool flipped_between_096_and_097 = false;
  for (const auto& row : rows) {
    if (row.at("inequality") == "mermin") {
      EXPECT_EQ(row.at("violated"), "false");
    }
    if (row.at("inequality") == "zukowski") {
      const double v = as_double(row, "v");
      const bool violated = row.at("violated") == "true";
      EXPECT_EQ(violated, v > 0.9640) << "v=" << v;
      if (std::abs(v - 0.97) < 1e-9 && violated) {
        flipped_between_096_and_097 = true;
      }
    }
  }
  EXPECT_TRUE(flipped_between_096_and_097);
}

TEST(CliTest, ScanSingleCopyNeverViolates) {
  const auto run = run_cli("scan --n 1 --v-from 0 --v-to 1 --steps 21");
  ASSERT_EQ(run.exit_code, 0);
  for (const auto& row : parse_csv(run.out)) {
    EXPECT_EQ(row.at("violated"), "false") << row.at("inequality");
  }
}

TEST(CliTest, VerifyPassesAndNamesChecks) {
  const auto run = run_cli("verify --max-n 2 2>/dev/null");
  ASSERT_EQ(run.exit_code, 0);
  const auto rows = parse_csv(run.out);
  bool found_oracle_row = false;
  for (const auto& row : rows) {
    EXPECT_EQ(row.at("pass"), "true") << row.at("check");
    if (row.at("check") == "dense-vs-factorized N=2 V=0.75") {
      found_oracle_row = true;
      EXPECT_LT(as_double(row, "deviation"), 1e-9);
    }
  }
  EXPECT_TRUE(found_oracle_row);
}

TEST(CliTest, VerifyRejectsOversizedRequest) {
  EXPECT_EQ(run_cli("verify --max-n 99 2>/dev/null").exit_code, 2);
}

TEST(CliTest, VerifyFailsUnderImpossibleTolerance) {
  const auto run = run_cli("verify --max-n 1 --tol 1e-30 2>/dev/null");
  EXPECT_EQ(run.exit_code, 1);
  bool any_fail = false;
  for (const auto& row : parse_csv(run.out)) {
    if (row.at("pass") == "false") {
      any_fail = true;
    }
  }
  EXPECT_TRUE(any_fail);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli("scan --n 2 --v-from 0.5 --v-to 0.2 2>/dev/null").exit_code, 2);
  EXPECT_EQ(run_cli("scan --n 2 --v-to 1.5 2>/dev/null").exit_code, 2);
  EXPECT_EQ(run_cli("correlations --v 1.5 2>/dev/null").exit_code, 2);
  EXPECT_EQ(run_cli("correlations 2>/dev/null").exit_code, 2);
  EXPECT_EQ(run_cli("thresholds --format xml 2>/dev/null").exit_code, 2);
  EXPECT_EQ(run_cli("unknown-subcommand 2>/dev/null").exit_code, 2);
  EXPECT_EQ(run_cli("2>/dev/null").exit_code, 2);
}

TEST(CliTest, VersionFlag) {
  const auto run = run_cli("--version");
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_NE(run.out.find("qbell"), std::string::npos);
}

TEST(CliTest, CsvAndJsonRenderSameRows) {
  const auto csv = run_cli("thresholds --max-n 3");
  const auto json_run = run_cli("thresholds --max-n 3 --format json");
  ASSERT_EQ(csv.exit_code, 0);
  ASSERT_EQ(json_run.exit_code, 0);
  const auto csv_rows = parse_csv(csv.out);
  const auto parsed = nlohmann::json::parse(json_run.out);
  ASSERT_TRUE(parsed.is_array());
  ASSERT_EQ(parsed.size(), csv_rows.size());
  for (std::size_t i = 0; i < csv_rows.size(); ++i) {
    EXPECT_NEAR(parsed[i].at("threshold").get<double>(),
                as_double(csv_rows[i], "threshold"), 1e-12);
    EXPECT_EQ(parsed[i].at("violation_possible").get<bool>(),
              csv_rows[i].at("violation_possible") == "true");
  }
}

TEST(CliTest, ScanJsonKeysAreStable) {
  const auto run = run_cli("scan --n 2 --v-from 0.5 --v-to 0.5 --steps 1 --format json");
  ASSERT_EQ(run.exit_code, 0);
  const std::string expected_order =
      "{\"n\":2,\"v\":0.5,\"inequality\":\"mermin\"";
  EXPECT_NE(run.out.find(expected_order), std::string::npos) << run.out;
}

TEST(CliTest, ByteIdenticalRepeatRuns) {
  for (const char* args :
       {"thresholds --max-n 6 --format json",
        "scan --n 3 --v-from 0 --v-to 1 --steps 17",
        "correlations --v 0.7 --format json", "verify --max-n 1"}) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    ASSERT_EQ(first.exit_code, 0) << args;
    ASSERT_EQ(second.exit_code, 0) << args;
    EXPECT_EQ(first.out, second.out) << args;
  }
}

TEST(CliTest, DenseCapFlagLimitsVerify) {
  EXPECT_EQ(run_cli("verify --max-n 3 --dense-cap 4 2>/dev/null").exit_code, 2);
  EXPECT_EQ(run_cli("verify --max-n 2 --dense-cap 4 2>/dev/null").exit_code, 0);
}

}  // namespace
