#pragma once

#include "qbell/dense.hpp"

namespace qbell {

/// Normalized pure state of n qubits; amplitudes indexed with site 1 as the
/// most significant bit.
struct Ket {
  int n_qubits = 0;
  CVector amplitudes;
};

/// Hermitian, unit-trace, positive-semidefinite operator on n qubits.
struct DensityOperator {
  int n_qubits = 0;
  CMatrix matrix;
};

/// Interferometric contrast V of the noisy Bell state, confined to [0, 1].
class Visibility {
 public:
  explicit Visibility(double v) : v_(v) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError("visibility must lie in [0, 1]");
    }
  }
  double value() const { return v_; }

 private:
  double v_;
};

/// (|0...0> + sign·e^{i·phase}|1...1>)/√2 on n_qubits sites.
Ket ghz(int n_qubits, double phase, int sign);

/// The two-qubit Bell state (|00> + i|11>)/√2. This phase convention makes
/// the pair correlations come out as (E_xx, E_xy, E_yx, E_yy) = (0, 1, 1, 0)
/// under the standard Pauli matrices.
Ket bell_psi();

/// |k><k| as a density operator.
DensityOperator pure_density(const Ket& k);

/// v·|ψ><ψ| + (1−v)·I/4 with ψ the Bell state above.
DensityOperator noisy_bell(Visibility v);

/// n_copies-fold Kronecker power of rho.
DensityOperator tensor_power(const DensityOperator& rho, int n_copies);

/// Hermiticity, unit trace, and positive semidefiniteness at the given
/// absolute tolerance. PSD is probed with deterministic random vectors plus
/// an LDLT factorization (the factorization is skipped above 2^8 dimensions,
/// where the probe check alone applies).
bool is_valid_density(const DensityOperator& rho, double tol = 1e-10);

}  // namespace qbell
