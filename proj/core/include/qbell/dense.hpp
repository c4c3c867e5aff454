#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qbell/errors.hpp"

namespace qbell {

using Complex = std::complex<double>;
using CMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::VectorXcd;

/// Largest qubit count for which dense operators may be built.
/// Defaults to 12 (4096x4096 matrices); overridable through the DENSE_CAP
/// environment variable or set_dense_qubit_cap().
int dense_qubit_cap();
void set_dense_qubit_cap(int n_qubits);

/// Dimension ceiling implied by the qubit cap (2^cap).
Eigen::Index dense_dim_cap();

/// Kronecker product with the FIRST factor as the most significant index
/// block: (a ⊗ b)(i1*db+i2, j1*db+j2) = a(i1,j1)·b(i2,j2).
/// Site 1 of a multi-site product is therefore the most significant bit.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// n-fold Kronecker power of a.
CMatrix kron_power(const CMatrix& a, int n);

CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
Complex trace(const CMatrix& a);

/// trace(a·b) without forming the product.
Complex trace_product(const CMatrix& a, const CMatrix& b);

/// Operator-valued real part (f + f†)/2. Hermitian for any square f.
CMatrix hermitian_re(const CMatrix& f);

/// Operator-valued imaginary part (f − f†)/(2i). Hermitian for any square f;
/// f == hermitian_re(f) + i·hermitian_im(f) holds exactly.
CMatrix hermitian_im(const CMatrix& f);

bool is_hermitian(const CMatrix& a, double tol = 1e-10);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol = 1e-10);

/// Largest entrywise |a - b|; infinity when shapes differ.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Largest entrywise |a - a†|.
double hermiticity_defect(const CMatrix& a);

}  // namespace qbell
