#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qbell::cli {

/// One named verification check: measured deviation against its tolerance.
struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed() const { return deviation <= tolerance; }
};

/// Runs the library's invariant suites with dense cross-checks up to
/// 2·max_n qubits. tol_override, when set, replaces every check's default
/// tolerance. Throws SizeLimitError when 2·max_n exceeds the dense cap.
std::vector<CheckResult> run_verification(int max_n,
                                          std::optional<double> tol_override);

}  // namespace qbell::cli
