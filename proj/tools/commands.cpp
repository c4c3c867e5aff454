#include "commands.hpp"

#include <string>
#include <vector>

#include "qbell/analysis.hpp"

namespace qbell::cli {

namespace {

std::vector<Visibility> linear_grid(double v_from, double v_to, int steps) {
  if (!(v_from >= 0.0 && v_from <= v_to && v_to <= 1.0)) {
    throw DomainError("scan range must satisfy 0 <= v-from <= v-to <= 1");
  }
  if (steps < 1) {
    throw DomainError("scan requires steps >= 1");
  }
  std::vector<Visibility> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    grid.emplace_back(v_from);
    return grid;
  }
  for (int i = 0; i < steps; ++i) {
    const double v = i + 1 == steps
                         ? v_to
                         : v_from + (v_to - v_from) * i / (steps - 1);
    grid.emplace_back(v);
  }
  return grid;
}

}  // namespace

OutputRecord thresholds_record(int max_n) {
  const ThresholdCurve curve = threshold_curve(max_n);
  OutputRecord record{"thresholds", {"n", "threshold", "violation_possible"}, {}};
  for (const auto& entry : curve.entries) {
    record.rows.push_back({static_cast<std::int64_t>(entry.n_copies),
                           entry.threshold, entry.threshold < 1.0});
  }
  record.rows.push_back(
      {std::string("asymptote"), curve.asymptote, curve.asymptote < 1.0});
  return record;
}

OutputRecord scan_record(int n_copies, double v_from, double v_to, int steps) {
  const std::vector<Visibility> grid = linear_grid(v_from, v_to, steps);
  OutputRecord record{
      "scan", {"n", "v", "inequality", "value", "bound", "violated"}, {}};
  for (const InequalityReport& report : scan(n_copies, grid)) {
    record.rows.push_back({static_cast<std::int64_t>(report.n_copies),
                           report.visibility, report.name, report.value,
                           report.bound, report.violated});
  }
  return record;
}

OutputRecord correlations_record(double v) {
  const DensityOperator rho = noisy_bell(Visibility(v));
  OutputRecord record{"correlations", {"name", "value", "bound", "violated"}, {}};
  for (const char* settings : {"XX", "XY", "YX", "YY"}) {
    const double value = correlation(rho, settings);
    std::string name = "corr-";
    name += static_cast<char>(settings[0] + ('x' - 'X'));
    name += static_cast<char>(settings[1] + ('x' - 'X'));
    record.rows.push_back(
        {std::move(name), value, 1.0, bound_exceeded(value, 1.0)});
  }
  for (const InequalityReport& report : chsh_suite(rho)) {
    record.rows.push_back(
        {report.name, report.value, report.bound, report.violated});
  }
  return record;
}

VerifyOutcome verify_outcome(int max_n, std::optional<double> tol_override) {
  VerifyOutcome outcome;
  outcome.checks = run_verification(max_n, tol_override);
  outcome.record =
      OutputRecord{"verify", {"check", "deviation", "tolerance", "pass"}, {}};
  for (const CheckResult& check : outcome.checks) {
    outcome.record.rows.push_back(
        {check.name, check.deviation, check.tolerance, check.passed()});
    outcome.all_passed = outcome.all_passed && check.passed();
  }
  return outcome;
}

}  // namespace qbell::cli
