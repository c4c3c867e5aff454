#include "qbell/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <Eigen/Cholesky>

namespace qbell {

namespace {

constexpr Eigen::Index kMaxFactorizationDim = 256;

void require_qubits_within_cap(int n_qubits, const char* what) {
  if (n_qubits > dense_qubit_cap()) {
    throw SizeLimitError(std::string(what) + " on " + std::to_string(n_qubits) +
                         " qubits exceeds the dense cap of " +
                         std::to_string(dense_qubit_cap()) + " qubits");
  }
}

}  // namespace

Ket ghz(int n_qubits, double phase, int sign) {
  if (n_qubits < 1) {
    throw DomainError("ghz requires n_qubits >= 1");
  }
  if (sign != 1 && sign != -1) {
    throw DomainError("ghz sign must be +1 or -1");
  }
  require_qubits_within_cap(n_qubits, "ghz state");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  CVector amplitudes = CVector::Zero(dim);
  amplitudes(0) = inv_sqrt2;
  amplitudes(dim - 1) = static_cast<double>(sign) *
                        std::polar(inv_sqrt2, phase);
  return Ket{n_qubits, std::move(amplitudes)};
}

Ket bell_psi() {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  CVector amplitudes = CVector::Zero(4);
  amplitudes(0) = inv_sqrt2;
  amplitudes(3) = Complex(0.0, inv_sqrt2);
  return Ket{2, std::move(amplitudes)};
}

DensityOperator pure_density(const Ket& k) {
  CMatrix matrix = k.amplitudes * k.amplitudes.adjoint();
  return DensityOperator{k.n_qubits, std::move(matrix)};
}

DensityOperator noisy_bell(Visibility v) {
  const DensityOperator pure = pure_density(bell_psi());
  CMatrix matrix = v.value() * pure.matrix +
                   ((1.0 - v.value()) / 4.0) * CMatrix::Identity(4, 4);
  return DensityOperator{2, std::move(matrix)};
}

DensityOperator tensor_power(const DensityOperator& rho, int n_copies) {
  if (n_copies < 1) {
    throw DomainError("tensor_power requires n_copies >= 1");
  }
  const int total_qubits = rho.n_qubits * n_copies;
  require_qubits_within_cap(total_qubits, "tensor power");
  CMatrix matrix = rho.matrix;
  for (int k = 1; k < n_copies; ++k) {
    matrix = kron(matrix, rho.matrix);
  }
  return DensityOperator{total_qubits, std::move(matrix)};
}

bool is_valid_density(const DensityOperator& rho, double tol) {
  const CMatrix& m = rho.matrix;
  const Eigen::Index dim = Eigen::Index{1} << rho.n_qubits;
  if (m.rows() != dim || m.cols() != dim) {
    return false;
  }
  if (hermiticity_defect(m) > tol) {
    return false;
  }
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol) {
    return false;
  }

  std::mt19937 rng(0x9e3779b9u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int probe = 0; probe < 16; ++probe) {
    CVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      v(i) = Complex(gauss(rng), gauss(rng));
    }
    v.normalize();
    const Complex quad = v.dot(m * v);
    if (quad.real() < -tol || std::abs(quad.imag()) > tol) {
      return false;
    }
  }

  if (dim <= kMaxFactorizationDim) {
    Eigen::LDLT<CMatrix> ldlt(m);
    if (ldlt.info() != Eigen::Success) {
      return false;
    }
    if (ldlt.vectorD().real().minCoeff() < -tol) {
      return false;
    }
  }
  return true;
}

}  // namespace qbell
