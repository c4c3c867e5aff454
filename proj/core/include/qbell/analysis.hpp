#pragma once

#include <array>
#include <string>
#include <vector>

#include "qbell/operators.hpp"
#include "qbell/states.hpp"

namespace qbell {

/// One measured correlation: settings string over {X, Y} and its expectation.
struct CorrelationRecord {
  std::string settings;
  double value = 0.0;
};

/// Outcome of one inequality evaluation. violated ⇔ |value| > bound + 1e-12,
/// so boundary cases report non-violated. n_copies/visibility record the
/// evaluation context where known (0/NaN otherwise).
struct InequalityReport {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool violated = false;
  int n_copies = 0;
  double visibility = 0.0;
};

/// Threshold visibilities T(N) for N = 1..max plus the N→∞ asymptote.
struct ThresholdCurve {
  struct Entry {
    int n_copies = 0;
    double threshold = 0.0;
  };
  std::vector<Entry> entries;
  double asymptote = 0.0;
};

/// violated flag for a (value, bound) pair under the shared 1e-12 slack.
bool bound_exceeded(double value, double bound);

/// tr(rho · ⊗σ_s) for a settings string over {I, X, Y, Z} of length
/// rho.n_qubits. The imaginary residue must stay below 1e-10.
double correlation(const DensityOperator& rho, const std::string& settings);

/// The four two-setting combinations |±E_xx ± E_yy ± E_xy ± E_yx| against
/// the local realistic bound 2, reported as chsh-1..chsh-4.
std::array<InequalityReport, 4> chsh_suite(const DensityOperator& rho);

/// tr(ρ(V)^⊗N · B_{2N}) evaluated densely. Equals V^N.
double mermin_expectation_dense(int n_copies, Visibility v);

/// The same expectation as an explicit product over pairs: per-pair values
/// come from a 4x4 dense trace and are folded through the subset recursion
/// <B_{α∪β}> = ½<B_α>(<B_β>+<B'_β>) + ½<B'_α>(<B_β>−<B'_β>). No dense cap;
/// usable for N well beyond 10^6.
double mermin_expectation_factorized(int n_copies, Visibility v);

/// Σ_s coeff(s)·E(s) over the expansion's strings. Throws
/// IncompleteDataError when a string has no correlation record.
double expectation_from_correlations(
    const PauliExpansion& expansion,
    const std::vector<CorrelationRecord>& correlations);

/// <Z_{2N}> = (1/2)(π/2)^{2N}·2^{−(2N−1)/2}·V^N, evaluated in log space so
/// large N neither overflows nor underflows prematurely.
double zukowski_expectation(int n_copies, Visibility v);

/// Local realistic bound on <B> implied by |<Z>| ≤ 1:
/// 2·(2/π)^{2N}·2^{(2N−1)/2}.
double mermin_zukowski_bound(int n_copies);

/// Threshold visibility T(N) = (2·(2/π)^{2N}·2^{(2N−1)/2})^{1/N}, evaluated
/// in log space. T(N) < 1 iff N >= 2; strictly decreasing toward the
/// asymptote.
double threshold_visibility(int n_copies);

/// T(N) for N = 1..max_n plus the asymptote.
ThresholdCurve threshold_curve(int max_n);

/// N→∞ limit of T(N): 2·(2/π)² = 8/π².
double asymptotic_threshold();

/// Full two-setting correlation tensor E(k_1..k_n), k_i ∈ {x, y}. values is
/// indexed by the settings bitmask with site 1 as the most significant bit;
/// bit 0 selects σx, bit 1 selects σy.
struct CorrelationTensor {
  int n_sites = 0;
  std::vector<double> values;
};

/// Evaluates all 2^n correlations of rho over {X, Y}^n.
CorrelationTensor correlation_tensor(const DensityOperator& rho);

/// Membership test against the complete set of two-setting correlation Bell
/// inequalities: S = Σ_{s∈{±1}^n} |Σ_k (Π_{i: k_i=x} s_i)·E(k)| ≤ 2^n.
/// Reported as lhv-full-set with value S and bound 2^n.
InequalityReport lhv_full_set_check(const CorrelationTensor& tensor,
                                    int n_copies = 0,
                                    double visibility = 0.0);

/// Per grid point: the Bell-Mermin inequality (bound 1), the bound on <B>
/// implied by the Żukowski inequality, and the Żukowski inequality itself
/// (bound 1). Three reports per visibility, in grid order.
std::vector<InequalityReport> scan(int n_copies,
                                   const std::vector<Visibility>& v_grid);

}  // namespace qbell
