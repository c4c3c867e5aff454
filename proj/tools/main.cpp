#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qbell/dense.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
  std::string format = "csv";
  int dense_cap = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--dense-cap", flags.dense_cap,
                  "Qubit ceiling for dense operators (default 12; env DENSE_CAP)");
}

void apply_dense_cap(const CommonFlags& flags) {
  if (flags.dense_cap != 0) {
    qbell::set_dense_qubit_cap(flags.dense_cap);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell-Mermin / Bell-Zukowski inequality evaluation toolkit"};
  app.set_version_flag("--version", std::string("qbell ") + QBELL_VERSION);
  app.require_subcommand(1);

  CommonFlags verify_flags, thresholds_flags, scan_flags, corr_flags;

  int verify_max_n = 3;
  std::optional<double> verify_tol;
  auto* verify = app.add_subcommand(
      "verify", "Run the library's invariant checks and report deviations");
  verify->add_option("--max-n", verify_max_n,
                     "Largest copy count for dense cross-checks");
  verify->add_option("--tol", verify_tol,
                     "Override every check's tolerance with this value");
  add_common(verify, verify_flags);

  int thresholds_max_n = 8;
  auto* thresholds = app.add_subcommand(
      "thresholds", "Tabulate the violation threshold visibility T(N)");
  thresholds->add_option("--max-n", thresholds_max_n, "Largest copy count");
  add_common(thresholds, thresholds_flags);

  int scan_n = 2;
  double scan_from = 0.0;
  double scan_to = 1.0;
  int scan_steps = 11;
  auto* scan_cmd = app.add_subcommand(
      "scan", "Evaluate the inequality suite over a visibility grid");
  scan_cmd->add_option("--n", scan_n, "Number of shared state copies")
      ->required();
  scan_cmd->add_option("--v-from", scan_from, "Grid start visibility");
  scan_cmd->add_option("--v-to", scan_to, "Grid end visibility");
  scan_cmd->add_option("--steps", scan_steps, "Number of grid points");
  add_common(scan_cmd, scan_flags);

  double corr_v = 1.0;
  auto* correlations = app.add_subcommand(
      "correlations", "Pair correlations and CHSH suite of the noisy Bell state");
  correlations->add_option("--v", corr_v, "Visibility of the noisy Bell state")
      ->required();
  add_common(correlations, corr_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    using qbell::cli::parse_format;
    using qbell::cli::render;

    if (verify->parsed()) {
      apply_dense_cap(verify_flags);
      const auto format = parse_format(verify_flags.format);
      const auto outcome = qbell::cli::verify_outcome(verify_max_n, verify_tol);
      std::cout << render(outcome.record, format);
      if (!outcome.all_passed) {
        for (const auto& check : outcome.checks) {
          if (!check.passed()) {
            std::cerr << "verification failed: " << check.name << " (deviation "
                      << qbell::cli::format_real(check.deviation)
                      << " > tolerance "
                      << qbell::cli::format_real(check.tolerance) << ")\n";
            break;
          }
        }
        return kExitVerificationFailure;
      }
      return kExitOk;
    }
    if (thresholds->parsed()) {
      apply_dense_cap(thresholds_flags);
      const auto format = parse_format(thresholds_flags.format);
      std::cout << render(qbell::cli::thresholds_record(thresholds_max_n),
                          format);
      return kExitOk;
    }
    if (scan_cmd->parsed()) {
      apply_dense_cap(scan_flags);
      const auto format = parse_format(scan_flags.format);
      std::cout << render(
          qbell::cli::scan_record(scan_n, scan_from, scan_to, scan_steps),
          format);
      return kExitOk;
    }
    if (correlations->parsed()) {
      apply_dense_cap(corr_flags);
      const auto format = parse_format(corr_flags.format);
      std::cout << render(qbell::cli::correlations_record(corr_v), format);
      return kExitOk;
    }
  } catch (const qbell::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qbell::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
