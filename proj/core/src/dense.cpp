#include "qbell/dense.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>

namespace qbell {

namespace {

constexpr int kDefaultQubitCap = 12;
constexpr int kMaxQubitCap = 30;

std::atomic<int> g_qubit_cap{0};  // 0 = not yet initialized

int read_cap_from_env() {
  const char* raw = std::getenv("DENSE_CAP");
  if (raw == nullptr || *raw == '\0') {
    return kDefaultQubitCap;
  }
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1 || value > kMaxQubitCap) {
    throw DomainError("DENSE_CAP must be an integer in [1, " +
                      std::to_string(kMaxQubitCap) + "], got \"" +
                      std::string(raw) + "\"");
  }
  return static_cast<int>(value);
}

void require_square(const CMatrix& a, const char* op) {
  if (a.rows() != a.cols()) {
    throw ShapeError(std::string(op) + " requires a square matrix, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

}  // namespace

int dense_qubit_cap() {
  int cap = g_qubit_cap.load(std::memory_order_relaxed);
  if (cap == 0) {
    cap = read_cap_from_env();
    g_qubit_cap.store(cap, std::memory_order_relaxed);
  }
  return cap;
}

void set_dense_qubit_cap(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubitCap) {
    throw DomainError("dense qubit cap must lie in [1, " +
                      std::to_string(kMaxQubitCap) + "], got " +
                      std::to_string(n_qubits));
  }
  g_qubit_cap.store(n_qubits, std::memory_order_relaxed);
}

Eigen::Index dense_dim_cap() {
  return Eigen::Index{1} << dense_qubit_cap();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (rows > dense_dim_cap() || cols > dense_dim_cap()) {
    throw SizeLimitError("kron result " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " exceeds the dense cap of " +
                         std::to_string(dense_dim_cap()) + " (" +
                         std::to_string(dense_qubit_cap()) + " qubits)");
  }
  CMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix kron_power(const CMatrix& a, int n) {
  if (n < 1) {
    throw DomainError("kron_power requires n >= 1, got " + std::to_string(n));
  }
  CMatrix out = a;
  for (int k = 1; k < n; ++k) {
    out = kron(out, a);
  }
  return out;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul dimension mismatch: " + std::to_string(a.rows()) +
                     "x" + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  return a * b;
}

CMatrix adjoint(const CMatrix& a) {
  return a.adjoint();
}

Complex trace(const CMatrix& a) {
  require_square(a, "trace");
  return a.trace();
}

Complex trace_product(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw ShapeError("trace_product dimension mismatch: " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
  // tr(ab) = sum_{ik} a(i,k) b(k,i)
  return a.cwiseProduct(b.transpose()).sum();
}

CMatrix hermitian_re(const CMatrix& f) {
  require_square(f, "hermitian_re");
  return (f + f.adjoint()) / 2.0;
}

CMatrix hermitian_im(const CMatrix& f) {
  require_square(f, "hermitian_im");
  // (f − f†)/(2i) as a multiply by −i/2, which rounds nothing beyond the
  // subtraction; hermitian_re(f) + i·hermitian_im(f) == f then holds exactly.
  return Complex(0.0, -0.5) * (f - f.adjoint());
}

bool is_hermitian(const CMatrix& a, double tol) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  if (a.size() == 0) {
    return 0.0;
  }
  return (a - b).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const CMatrix& a) {
  if (a.size() == 0) {
    return 0.0;
  }
  return (a - CMatrix(a.adjoint())).cwiseAbs().maxCoeff();
}

}  // namespace qbell
