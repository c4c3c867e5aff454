#pragma once

#include <optional>

#include "table.hpp"
#include "verify_suite.hpp"

namespace qbell::cli {

/// Table of T(N) for N = 1..max_n plus the asymptote row.
OutputRecord thresholds_record(int max_n);

/// One row per (visibility, inequality) over an inclusive linear grid of
/// `steps` points from v_from to v_to.
OutputRecord scan_record(int n_copies, double v_from, double v_to, int steps);

/// Pair correlations of the noisy Bell state plus its CHSH suite.
OutputRecord correlations_record(double v);

struct VerifyOutcome {
  OutputRecord record;
  std::vector<CheckResult> checks;
  bool all_passed = true;
};

/// Runs the invariant suites and tabulates each check.
VerifyOutcome verify_outcome(int max_n, std::optional<double> tol_override);

}  // namespace qbell::cli
