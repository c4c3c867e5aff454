#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qbell/dense.hpp"

namespace qbell {

enum class Axis { I, X, Y, Z };

/// Standard 2x2 Pauli matrix (or the identity) for the given axis.
CMatrix pauli(Axis axis);

/// Per-site pair of Hermitian measurement observables (A, A').
struct ObservablePair {
  CMatrix a;
  CMatrix a_prime;
};

/// The two-setting choice used throughout: A = σx, A' = σy.
ObservablePair xy_settings();

/// f(x, y) = (1/√2)·e^{−iπ/4}·(x + i·y), applied entrywise to equal-dim
/// matrices. Scalars embed as 1x1 matrices; f(1, 1) = 1.
CMatrix f_combine(const CMatrix& x, const CMatrix& y);

/// Inverse of f_combine on Hermitian pairs: x = Re f − Im f, y = Re f + Im f
/// with operator-valued real/imaginary parts. For any square f,
/// f_combine(f_invert(f)) reproduces f exactly.
std::pair<CMatrix, CMatrix> f_invert(const CMatrix& f);

/// Hermitian pair (B, B') acting on n qubits.
struct BellOperatorPair {
  int n_qubits = 0;
  CMatrix b;
  CMatrix b_prime;
};

/// Builds (B, B') from the defining product f(B, B') = ⊗_k f(σx, σy).
/// n_qubits must be even and at least 2.
BellOperatorPair bell_mermin_product(int n_qubits);

/// Builds (B, B') by combining per-block operators through the subset
/// recursion
///   B_{α∪β}  = ½·B_α ⊗ (B_β + B'_β) + ½·B'_α ⊗ (B_β − B'_β),
///   B'_{α∪β} = ½·B'_α ⊗ (B'_β + B_β) + ½·B_α ⊗ (B'_β − B_β).
/// The partition must list disjoint, contiguous, ascending 1-based site
/// blocks whose union is {1..n}. Equals bell_mermin_product(n) entrywise.
BellOperatorPair bell_mermin_recursive(
    const std::vector<std::vector<int>>& partition);

/// Phase of the <0...0|B|1...1> entry of the product-form operator,
/// −(n−1)π/4.
double mermin_corner_phase(int n_qubits);

/// Rank-2 closed form 2^{(n−1)/2}·(|Ψ+><Ψ+| − |Ψ−><Ψ−|) built from GHZ
/// states. corner_phase fixes the phase of the <0...0|·|1...1> entry; the
/// default mermin_corner_phase(n) reproduces bell_mermin_product(n).b
/// exactly. Any corner_phase yields the same spectrum.
CMatrix bell_mermin_closed_form(int n_qubits, double corner_phase);
CMatrix bell_mermin_closed_form(int n_qubits);

/// (1/2)·(π/2)^n · 2^{−(n−1)/2} · B, the rescaled operator whose local
/// realistic bound is 1 under all-direction measurements.
CMatrix zukowski_operator(int n_qubits);

/// Expansion of an n-qubit operator over tensor products of σx/σy, keyed by
/// strings over {X, Y} with site 1 first. Real coefficients; the 2^n terms
/// reconstruct the operator whenever it lives in that span.
struct PauliExpansion {
  int n_qubits = 0;
  std::map<std::string, double> terms;
};

/// Expands pair.b over {X, Y}^n; coefficient of s is tr(b·σ_s)/2^n.
PauliExpansion pauli_expansion(const BellOperatorPair& pair);

/// ⊗_j pauli(s[j]) for a string over {I, X, Y, Z}, site 1 first.
CMatrix pauli_string_matrix(const std::string& settings);

}  // namespace qbell
