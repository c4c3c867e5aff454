#include "qbell/operators.hpp"

#include <cmath>
#include <numbers>

#include "qbell/states.hpp"

namespace qbell {

namespace {

// (1/√2)·e^{−iπ/4} is exactly (1 − i)/2.
constexpr Complex kFCoefficient{0.5, -0.5};

void require_even_sites(int n_qubits, const char* what) {
  if (n_qubits < 2 || n_qubits % 2 != 0) {
    throw DomainError(std::string(what) + " requires an even qubit count >= 2, got " +
                      std::to_string(n_qubits));
  }
  if (n_qubits > dense_qubit_cap()) {
    throw SizeLimitError(std::string(what) + " on " + std::to_string(n_qubits) +
                         " qubits exceeds the dense cap of " +
                         std::to_string(dense_qubit_cap()) + " qubits");
  }
}

// (B, B') for a block of n consecutive sites, any n >= 1.
BellOperatorPair block_pair(int n_sites) {
  const ObservablePair settings = xy_settings();
  const CMatrix per_site = f_combine(settings.a, settings.a_prime);
  const CMatrix product = kron_power(per_site, n_sites);
  auto [b, b_prime] = f_invert(product);
  return BellOperatorPair{n_sites, std::move(b), std::move(b_prime)};
}

BellOperatorPair combine_blocks(const BellOperatorPair& alpha,
                                const BellOperatorPair& beta) {
  CMatrix b = 0.5 * kron(alpha.b, beta.b + beta.b_prime) +
              0.5 * kron(alpha.b_prime, beta.b - beta.b_prime);
  CMatrix b_prime = 0.5 * kron(alpha.b_prime, beta.b_prime + beta.b) +
                    0.5 * kron(alpha.b, beta.b_prime - beta.b);
  return BellOperatorPair{alpha.n_qubits + beta.n_qubits, std::move(b),
                          std::move(b_prime)};
}

}  // namespace

CMatrix pauli(Axis axis) {
  CMatrix m(2, 2);
  switch (axis) {
    case Axis::I:
      m << 1, 0, 0, 1;
      break;
    case Axis::X:
      m << 0, 1, 1, 0;
      break;
    case Axis::Y:
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case Axis::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

ObservablePair xy_settings() {
  return ObservablePair{pauli(Axis::X), pauli(Axis::Y)};
}

CMatrix f_combine(const CMatrix& x, const CMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw ShapeError("f_combine requires equal dimensions, got " +
                     std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                     " vs " + std::to_string(y.rows()) + "x" +
                     std::to_string(y.cols()));
  }
  return kFCoefficient * (x + Complex(0, 1) * y);
}

std::pair<CMatrix, CMatrix> f_invert(const CMatrix& f) {
  const CMatrix re = hermitian_re(f);
  const CMatrix im = hermitian_im(f);
  return {re - im, re + im};
}

BellOperatorPair bell_mermin_product(int n_qubits) {
  require_even_sites(n_qubits, "bell_mermin_product");
  return block_pair(n_qubits);
}

BellOperatorPair bell_mermin_recursive(
    const std::vector<std::vector<int>>& partition) {
  if (partition.empty()) {
    throw PartitionError("partition must contain at least one block");
  }
  int expected_site = 1;
  for (const auto& block : partition) {
    if (block.empty()) {
      throw PartitionError("partition blocks must be non-empty");
    }
    for (int site : block) {
      if (site != expected_site) {
        throw PartitionError(
            "partition must list sites 1..n in ascending contiguous blocks; "
            "expected site " +
            std::to_string(expected_site) + ", got " + std::to_string(site));
      }
      ++expected_site;
    }
  }
  const int n_qubits = expected_site - 1;
  require_even_sites(n_qubits, "bell_mermin_recursive");

  BellOperatorPair acc = block_pair(static_cast<int>(partition.front().size()));
  for (std::size_t i = 1; i < partition.size(); ++i) {
    acc = combine_blocks(acc, block_pair(static_cast<int>(partition[i].size())));
  }
  return acc;
}

double mermin_corner_phase(int n_qubits) {
  return -(n_qubits - 1) * std::numbers::pi / 4.0;
}

CMatrix bell_mermin_closed_form(int n_qubits, double corner_phase) {
  require_even_sites(n_qubits, "bell_mermin_closed_form");
  // A GHZ ket phase φ puts e^{−iφ} on the <0...0|·|1...1> corner of the
  // projector difference, so the corner phase θ calls for φ = −θ.
  const Ket plus = ghz(n_qubits, -corner_phase, +1);
  const Ket minus = ghz(n_qubits, -corner_phase, -1);
  const double scale = std::pow(2.0, (n_qubits - 1) / 2.0);
  return scale * (pure_density(plus).matrix - pure_density(minus).matrix);
}

CMatrix bell_mermin_closed_form(int n_qubits) {
  return bell_mermin_closed_form(n_qubits, mermin_corner_phase(n_qubits));
}

CMatrix zukowski_operator(int n_qubits) {
  require_even_sites(n_qubits, "zukowski_operator");
  const double scale = 0.5 * std::pow(std::numbers::pi / 2.0, n_qubits) *
                       std::pow(2.0, -(n_qubits - 1) / 2.0);
  return scale * bell_mermin_closed_form(n_qubits);
}

PauliExpansion pauli_expansion(const BellOperatorPair& pair) {
  const int n = pair.n_qubits;
  const Eigen::Index dim = Eigen::Index{1} << n;
  PauliExpansion expansion{n, {}};
  for (Eigen::Index code = 0; code < dim; ++code) {
    std::string s(static_cast<std::size_t>(n), 'X');
    for (int site = 0; site < n; ++site) {
      if ((code >> (n - 1 - site)) & 1) {
        s[static_cast<std::size_t>(site)] = 'Y';
      }
    }
    const Complex coeff =
        trace_product(pair.b, pauli_string_matrix(s)) / static_cast<double>(dim);
    expansion.terms.emplace(std::move(s), coeff.real());
  }
  return expansion;
}

CMatrix pauli_string_matrix(const std::string& settings) {
  if (settings.empty()) {
    throw ShapeError("pauli string must be non-empty");
  }
  CMatrix out(1, 1);
  out(0, 0) = 1.0;
  for (char c : settings) {
    Axis axis;
    switch (c) {
      case 'I':
        axis = Axis::I;
        break;
      case 'X':
        axis = Axis::X;
        break;
      case 'Y':
        axis = Axis::Y;
        break;
      case 'Z':
        axis = Axis::Z;
        break;
      default:
        throw DomainError("pauli string may contain only I, X, Y, Z; got '" +
                          std::string(1, c) + "'");
    }
    out = kron(out, pauli(axis));
  }
  return out;
}

}  // namespace qbell
