// Acceptance suite: each test exercises one acceptance criterion end to end
// at its stated tolerance and prints one pass/fail line.

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "cli_harness.hpp"
#include "qbell/analysis.hpp"

namespace qbell {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CMatrix random_matrix(std::mt19937& rng, Eigen::Index dim) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  CMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      m(i, j) = Complex(uniform(rng), uniform(rng));
    }
  }
  return m;
}

TEST(Acceptance, C1_PairCorrelationTable) {
  const auto start = Clock::now();
  for (double v : {0.0, 0.25, 0.5, 0.85, 1.0}) {
    const DensityOperator rho = noisy_bell(Visibility(v));
    EXPECT_NEAR(correlation(rho, "XX"), 0.0, 1e-12) << "V=" << v;
    EXPECT_NEAR(correlation(rho, "XY"), v, 1e-12) << "V=" << v;
    EXPECT_NEAR(correlation(rho, "YX"), v, 1e-12) << "V=" << v;
    EXPECT_NEAR(correlation(rho, "YY"), 0.0, 1e-12) << "V=" << v;
  }
  EXPECT_LT(seconds_since(start), 1.0);
}

TEST(Acceptance, C2_ChshSuiteOnVisibilityGrid) {
  for (int i = 0; i <= 100; ++i) {
    const double v = static_cast<double>(i) / 100.0;
    const auto reports = chsh_suite(noisy_bell(Visibility(v)));
    EXPECT_NEAR(reports[0].value, 2.0 * v, 1e-12);
    EXPECT_NEAR(reports[1].value, 0.0, 1e-12);
    EXPECT_NEAR(reports[2].value, 0.0, 1e-12);
    EXPECT_NEAR(reports[3].value, 2.0 * v, 1e-12);
    for (const auto& report : reports) {
      EXPECT_EQ(report.bound, 2.0);
      EXPECT_FALSE(report.violated) << report.name << " V=" << v;
    }
  }
}

TEST(Acceptance, C3_OperatorConstructionTripleAgreement) {
  const auto start = Clock::now();
  for (int n : {2, 4, 6, 8}) {
    const BellOperatorPair direct = bell_mermin_product(n);
    const CMatrix closed = bell_mermin_closed_form(n, mermin_corner_phase(n));
    EXPECT_LE(max_abs_diff(direct.b, closed), 1e-10) << "n=" << n;
    for (int cut = 1; cut < n; ++cut) {
      std::vector<std::vector<int>> partition(2);
      for (int site = 1; site <= n; ++site) {
        partition[site <= cut ? 0 : 1].push_back(site);
      }
      const BellOperatorPair rec = bell_mermin_recursive(partition);
      EXPECT_LE(max_abs_diff(direct.b, rec.b), 1e-10)
          << "n=" << n << " cut=" << cut;
      EXPECT_LE(max_abs_diff(direct.b_prime, rec.b_prime), 1e-10)
          << "n=" << n << " cut=" << cut;
    }
  }
  EXPECT_LT(seconds_since(start), 30.0);
}

TEST(Acceptance, C4_MerminExpectationIsVisibilityPower) {
  for (int n : {1, 2, 3, 4}) {
    for (double v : {0.0, 0.3, 0.7, 1.0}) {
      const double dense = mermin_expectation_dense(n, Visibility(v));
      EXPECT_NEAR(dense, std::pow(v, n), 1e-9) << "N=" << n << " V=" << v;
      EXPECT_NEAR(dense, mermin_expectation_factorized(n, Visibility(v)), 1e-9)
          << "N=" << n << " V=" << v;
    }
  }
}

TEST(Acceptance, C5_ZukowskiScalingRelation) {
  for (int n : {2, 4, 6, 8}) {
    const double scale = 0.5 * std::pow(std::numbers::pi / 2.0, n) *
                         std::pow(2.0, -(n - 1) / 2.0);
    EXPECT_LE(
        max_abs_diff(zukowski_operator(n), scale * bell_mermin_product(n).b),
        1e-12)
        << "n=" << n;
  }
}

TEST(Acceptance, C6_ThresholdTable) {
  const double expected[] = {1.1463, 0.96394, 0.90983, 0.88393};
  for (int n = 1; n <= 4; ++n) {
    EXPECT_NEAR(threshold_visibility(n), expected[n - 1], 1e-4) << "N=" << n;
  }
  EXPECT_GT(threshold_visibility(1), 1.0);
  for (int n = 1; n <= 100; ++n) {
    EXPECT_LT(threshold_visibility(n + 1), threshold_visibility(n)) << n;
  }
  const double asym = asymptotic_threshold();
  EXPECT_LT(std::abs(threshold_visibility(1000) - asym), 1e-3);
  EXPECT_GT(asym, 0.81);
}

TEST(Acceptance, C7_HeadlineConflictReproduction) {
  const auto start = Clock::now();

  const auto at_098 = scan(2, {Visibility(0.98)});
  ASSERT_EQ(at_098.size(), 3u);
  EXPECT_NEAR(at_098[0].value, 0.9604, 1e-4);
  EXPECT_FALSE(at_098[0].violated);
  EXPECT_NEAR(at_098[1].bound, 0.92918, 1e-4);
  EXPECT_TRUE(at_098[1].violated);
  EXPECT_NEAR(at_098[2].value, 1.0337, 1e-4);
  EXPECT_GT(at_098[2].value, 1.0);
  EXPECT_TRUE(at_098[2].violated);

  for (const auto& report : scan(2, {Visibility(0.90)})) {
    EXPECT_FALSE(report.violated) << report.name;
  }

  for (int i = 0; i <= 100; ++i) {
    const auto reports = scan(1, {Visibility(static_cast<double>(i) / 100.0)});
    for (const auto& report : reports) {
      if (report.name == "zukowski") {
        EXPECT_FALSE(report.violated) << "V=" << report.visibility;
      }
    }
  }
  EXPECT_LT(seconds_since(start), 5.0);
}

TEST(Acceptance, C8_LhvFullSetCheck) {
  // Brute force over sign vectors, cross-checked against the hand-derived
  // closed forms S = 4V (N=1) and S = 16V² (N=2).
  for (int n : {1, 2}) {
    for (double v : {0.5, 1.0}) {
      const CorrelationTensor tensor =
          correlation_tensor(tensor_power(noisy_bell(Visibility(v)), n));
      const InequalityReport report = lhv_full_set_check(tensor, n, v);
      EXPECT_FALSE(report.violated) << "N=" << n << " V=" << v;
      const double closed_form = n == 1 ? 4.0 * v : 16.0 * v * v;
      EXPECT_NEAR(report.value, closed_form, 1e-10) << "N=" << n << " V=" << v;
    }
  }
  const InequalityReport tight = lhv_full_set_check(
      correlation_tensor(noisy_bell(Visibility(1.0))), 1, 1.0);
  EXPECT_NEAR(tight.value, 4.0, 1e-10);
  EXPECT_EQ(tight.bound, 4.0);
}

TEST(Acceptance, C9_PropertySuites) {
  std::mt19937 rng(31u);
  for (int rep = 0; rep < 100; ++rep) {
    const CMatrix f = random_matrix(rng, 4);
    const auto [x, y] = f_invert(f);
    EXPECT_LE(max_abs_diff(f_combine(x, y), f), 1e-12);
  }

  for (double v : {0.0, 0.25, 0.5, 0.85, 1.0}) {
    const DensityOperator rho = noisy_bell(Visibility(v));
    EXPECT_TRUE(is_valid_density(rho, 1e-10)) << "V=" << v;
    EXPECT_TRUE(is_valid_density(tensor_power(rho, 2), 1e-10)) << "V=" << v;
    EXPECT_TRUE(is_valid_density(tensor_power(rho, 3), 1e-10)) << "V=" << v;
  }
  EXPECT_TRUE(is_valid_density(pure_density(bell_psi()), 1e-10));

  for (int n : {2, 4, 6, 8}) {
    const CMatrix b = bell_mermin_product(n).b;
    EXPECT_LE(max_abs_diff(b * b * b, std::pow(2.0, n - 1) * b), 1e-8)
        << "n=" << n;
  }

  for (const char* args :
       {"thresholds --max-n 8 --format json",
        "scan --n 2 --v-from 0.9 --v-to 1 --steps 11",
        "correlations --v 0.85"}) {
    const auto first = qbell_test::run_cli(args);
    const auto second = qbell_test::run_cli(args);
    ASSERT_EQ(first.exit_code, 0) << args;
    EXPECT_EQ(first.out, second.out) << args;
    EXPECT_FALSE(first.out.empty()) << args;
  }
}

class CriterionLinePrinter : public ::testing::EmptyTestEventListener {
  void OnTestEnd(const ::testing::TestInfo& info) override {
    std::printf("[criterion] %s: %s\n", info.name(),
                info.result()->Passed() ? "PASS" : "FAIL");
    std::fflush(stdout);
  }
};

}  // namespace
}  // namespace qbell

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  ::testing::UnitTest::GetInstance()->listeners().Append(
      new qbell::CriterionLinePrinter);
  return RUN_ALL_TESTS();
}
