#include "qbell/analysis.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>

namespace qbell {

namespace {

constexpr double kViolationSlack = 1e-12;
constexpr double kImagResidueTol = 1e-10;

double real_trace_product(const CMatrix& a, const CMatrix& b,
                          const char* what) {
  const Complex value = trace_product(a, b);
  if (std::abs(value.imag()) >= kImagResidueTol) {
    throw DomainError(std::string(what) + " has imaginary residue " +
                      std::to_string(value.imag()));
  }
  return value.real();
}

InequalityReport make_report(std::string name, double value, double bound,
                             int n_copies, double visibility) {
  InequalityReport report;
  report.name = std::move(name);
  report.value = value;
  report.bound = bound;
  report.violated = bound_exceeded(value, bound);
  report.n_copies = n_copies;
  report.visibility = visibility;
  return report;
}

// log of the scale factor connecting V^N to <Z_{2N}>:
// (1/2)(π/2)^{2N}·2^{−(2N−1)/2}.
double log_zukowski_scale(int n_copies) {
  return std::log(0.5) +
         2.0 * n_copies * std::log(std::numbers::pi / 2.0) -
         (2.0 * n_copies - 1.0) / 2.0 * std::numbers::ln2;
}

void require_copies(int n_copies) {
  if (n_copies < 1) {
    throw DomainError("n_copies must be >= 1, got " +
                      std::to_string(n_copies));
  }
}

}  // namespace

bool bound_exceeded(double value, double bound) {
  return std::abs(value) > bound + kViolationSlack;
}

double correlation(const DensityOperator& rho, const std::string& settings) {
  if (static_cast<int>(settings.size()) != rho.n_qubits) {
    throw ShapeError("settings string of length " +
                     std::to_string(settings.size()) + " does not match " +
                     std::to_string(rho.n_qubits) + " qubits");
  }
  return real_trace_product(rho.matrix, pauli_string_matrix(settings),
                            "correlation");
}

std::array<InequalityReport, 4> chsh_suite(const DensityOperator& rho) {
  if (rho.n_qubits != 2) {
    throw ShapeError("chsh_suite requires a two-qubit state, got " +
                     std::to_string(rho.n_qubits) + " qubits");
  }
  const double exx = correlation(rho, "XX");
  const double eyy = correlation(rho, "YY");
  const double exy = correlation(rho, "XY");
  const double eyx = correlation(rho, "YX");
  const double unknown_v = std::numeric_limits<double>::quiet_NaN();
  return {
      make_report("chsh-1", std::abs(exx - eyy + exy + eyx), 2.0, 1, unknown_v),
      make_report("chsh-2", std::abs(exx + eyy - exy + eyx), 2.0, 1, unknown_v),
      make_report("chsh-3", std::abs(exx + eyy + exy - eyx), 2.0, 1, unknown_v),
      make_report("chsh-4", std::abs(exx - eyy - exy - eyx), 2.0, 1, unknown_v),
  };
}

double mermin_expectation_dense(int n_copies, Visibility v) {
  require_copies(n_copies);
  const DensityOperator rho = tensor_power(noisy_bell(v), n_copies);
  const BellOperatorPair pair = bell_mermin_product(2 * n_copies);
  return real_trace_product(rho.matrix, pair.b, "mermin expectation");
}

double mermin_expectation_factorized(int n_copies, Visibility v) {
  require_copies(n_copies);
  const DensityOperator rho_pair = noisy_bell(v);
  const BellOperatorPair pair = bell_mermin_product(2);
  const double eb =
      real_trace_product(rho_pair.matrix, pair.b, "pair expectation");
  const double eb_prime =
      real_trace_product(rho_pair.matrix, pair.b_prime, "pair expectation");

  double acc_b = eb;
  double acc_b_prime = eb_prime;
  for (int k = 1; k < n_copies; ++k) {
    const double next_b =
        0.5 * acc_b * (eb + eb_prime) + 0.5 * acc_b_prime * (eb - eb_prime);
    const double next_b_prime =
        0.5 * acc_b_prime * (eb_prime + eb) + 0.5 * acc_b * (eb_prime - eb);
    acc_b = next_b;
    acc_b_prime = next_b_prime;
  }
  return acc_b;
}

double expectation_from_correlations(
    const PauliExpansion& expansion,
    const std::vector<CorrelationRecord>& correlations) {
  std::unordered_map<std::string, double> table;
  table.reserve(correlations.size());
  for (const auto& record : correlations) {
    table[record.settings] = record.value;
  }
  double total = 0.0;
  for (const auto& [settings, coeff] : expansion.terms) {
    const auto it = table.find(settings);
    if (it == table.end()) {
      throw IncompleteDataError("no correlation supplied for settings " +
                                settings);
    }
    total += coeff * it->second;
  }
  return total;
}

double zukowski_expectation(int n_copies, Visibility v) {
  require_copies(n_copies);
  if (v.value() == 0.0) {
    return 0.0;
  }
  return std::exp(log_zukowski_scale(n_copies) +
                  n_copies * std::log(v.value()));
}

double mermin_zukowski_bound(int n_copies) {
  require_copies(n_copies);
  return std::exp(-log_zukowski_scale(n_copies));
}

double threshold_visibility(int n_copies) {
  require_copies(n_copies);
  return std::exp(-log_zukowski_scale(n_copies) / n_copies);
}

ThresholdCurve threshold_curve(int max_n) {
  require_copies(max_n);
  ThresholdCurve curve;
  curve.entries.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) {
    curve.entries.push_back({n, threshold_visibility(n)});
  }
  curve.asymptote = asymptotic_threshold();
  return curve;
}

double asymptotic_threshold() {
  return 8.0 / (std::numbers::pi * std::numbers::pi);
}

CorrelationTensor correlation_tensor(const DensityOperator& rho) {
  const int n = rho.n_qubits;
  const std::size_t count = std::size_t{1} << n;
  CorrelationTensor tensor{n, std::vector<double>(count, 0.0)};
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::string settings(static_cast<std::size_t>(n), 'X');
    for (int site = 0; site < n; ++site) {
      if ((mask >> (n - 1 - site)) & 1u) {
        settings[static_cast<std::size_t>(site)] = 'Y';
      }
    }
    tensor.values[mask] = correlation(rho, settings);
  }
  return tensor;
}

InequalityReport lhv_full_set_check(const CorrelationTensor& tensor,
                                    int n_copies, double visibility) {
  const int n = tensor.n_sites;
  if (n < 1) {
    throw IncompleteDataError("correlation tensor has no sites");
  }
  const std::size_t count = std::size_t{1} << n;
  if (tensor.values.size() != count) {
    throw IncompleteDataError("correlation tensor for " + std::to_string(n) +
                              " sites needs " + std::to_string(count) +
                              " entries, got " +
                              std::to_string(tensor.values.size()));
  }
  const std::size_t full = count - 1;
  double s_total = 0.0;
  for (std::size_t sign_mask = 0; sign_mask < count; ++sign_mask) {
    double inner = 0.0;
    for (std::size_t mask = 0; mask < count; ++mask) {
      // Sites measuring σx carry their sign s_i; σy sites contribute s_i^2=1.
      const std::size_t x_sites = ~mask & full;
      const bool negate = (std::popcount(x_sites & sign_mask) & 1) != 0;
      inner += negate ? -tensor.values[mask] : tensor.values[mask];
    }
    s_total += std::abs(inner);
  }
  return make_report("lhv-full-set", s_total, static_cast<double>(count),
                     n_copies, visibility);
}

std::vector<InequalityReport> scan(int n_copies,
                                   const std::vector<Visibility>& v_grid) {
  require_copies(n_copies);
  const double zukowski_bound_on_b = mermin_zukowski_bound(n_copies);
  std::vector<InequalityReport> reports;
  reports.reserve(3 * v_grid.size());
  for (const Visibility& v : v_grid) {
    const double mermin_value = mermin_expectation_factorized(n_copies, v);
    reports.push_back(
        make_report("mermin", mermin_value, 1.0, n_copies, v.value()));
    reports.push_back(make_report("mermin-zukowski-bound", mermin_value,
                                  zukowski_bound_on_b, n_copies, v.value()));
    reports.push_back(make_report("zukowski",
                                  zukowski_expectation(n_copies, v), 1.0,
                                  n_copies, v.value()));
  }
  return reports;
}

}  // namespace qbell
