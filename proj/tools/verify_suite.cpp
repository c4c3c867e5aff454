#include "verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qbell/analysis.hpp"
#include "table.hpp"

namespace qbell::cli {

namespace {

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::optional<double> tol_override)
      : tol_override_(tol_override) {}

  void add(std::string name, double deviation, double default_tol) {
    results_.push_back(CheckResult{std::move(name), deviation,
                                   tol_override_.value_or(default_tol)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::optional<double> tol_override_;
  std::vector<CheckResult> results_;
};

CMatrix random_matrix(std::mt19937& rng, Eigen::Index dim) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  CMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      m(i, j) = Complex(uniform(rng), uniform(rng));
    }
  }
  return m;
}

const std::vector<double>& coarse_grid() {
  static const std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  return grid;
}

std::string grid_label(double v) {
  return format_real(v);
}

void numerics_checks(SuiteBuilder& suite) {
  std::mt19937 rng(20240811u);

  double assoc = 0.0, trace_dev = 0.0, split = 0.0, herm = 0.0, round_trip = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    const CMatrix a = random_matrix(rng, 2);
    const CMatrix b = random_matrix(rng, 3);
    const CMatrix c = random_matrix(rng, 2);
    assoc = std::max(assoc, max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))));
    trace_dev = std::max(trace_dev,
                         std::abs(trace(kron(a, b)) - trace(a) * trace(b)));

    const CMatrix f = random_matrix(rng, 8);
    const CMatrix re = hermitian_re(f);
    const CMatrix im = hermitian_im(f);
    split = std::max(split, max_abs_diff(re + Complex(0, 1) * im, f));
    herm = std::max({herm, hermiticity_defect(re), hermiticity_defect(im)});

    auto [x, y] = f_invert(f);
    round_trip = std::max(round_trip, max_abs_diff(f_combine(x, y), f));
  }
  suite.add("kron-associativity", assoc, 1e-12);
  suite.add("kron-trace-multiplicative", trace_dev, 1e-12);
  suite.add("hermitian-split-reconstruct", split, 1e-12);
  suite.add("hermitian-parts-hermitian", herm, 1e-12);
  suite.add("f-round-trip", round_trip, 1e-12);
}

double density_defect(const DensityOperator& rho) {
  double defect = hermiticity_defect(rho.matrix);
  defect = std::max(defect, std::abs(trace(rho.matrix) - Complex(1.0, 0.0)));
  if (!is_valid_density(rho, 1e-10)) {
    defect = std::max(defect, 1.0);
  }
  return defect;
}

void states_checks(SuiteBuilder& suite, int max_n) {
  double validity = 0.0;
  const int power_limit = std::min(max_n, 3);
  for (double v : coarse_grid()) {
    const DensityOperator rho = noisy_bell(Visibility(v));
    validity = std::max(validity, density_defect(rho));
    for (int n = 2; n <= power_limit; ++n) {
      validity = std::max(validity, density_defect(tensor_power(rho, n)));
    }
  }
  suite.add("state-validity", validity, 1e-10);

  const CMatrix mid = noisy_bell(Visibility(0.5)).matrix;
  const CMatrix averaged = 0.5 * (noisy_bell(Visibility(0.25)).matrix +
                                  noisy_bell(Visibility(0.75)).matrix);
  suite.add("noisy-bell-affine", max_abs_diff(mid, averaged), 1e-12);

  if (6 <= dense_qubit_cap()) {
    const DensityOperator rho = noisy_bell(Visibility(0.7));
    const CMatrix composed =
        kron(tensor_power(rho, 1).matrix, tensor_power(rho, 2).matrix);
    suite.add("tensor-power-compose",
              max_abs_diff(composed, tensor_power(rho, 3).matrix), 1e-12);
  }
}

void operators_checks(SuiteBuilder& suite, int max_n) {
  for (int n = 2; n <= 2 * max_n; n += 2) {
    const BellOperatorPair direct = bell_mermin_product(n);
    double dev = max_abs_diff(direct.b, bell_mermin_closed_form(n));
    for (int split = 1; split < n; ++split) {
      std::vector<std::vector<int>> partition(2);
      for (int site = 1; site <= n; ++site) {
        partition[site <= split ? 0 : 1].push_back(site);
      }
      const BellOperatorPair rec = bell_mermin_recursive(partition);
      dev = std::max({dev, max_abs_diff(direct.b, rec.b),
                      max_abs_diff(direct.b_prime, rec.b_prime)});
    }
    suite.add("operator-triple-agreement n=" + std::to_string(n), dev, 1e-10);
  }

  for (int n = 2; n <= std::min(2 * max_n, 8); n += 2) {
    const CMatrix b = bell_mermin_product(n).b;
    const double scale = std::pow(2.0, n - 1);
    suite.add("operator-cube-identity n=" + std::to_string(n),
              max_abs_diff(b * b * b, scale * b), 1e-8);
  }

  const BellOperatorPair pair = bell_mermin_product(2);
  const CMatrix f = f_combine(pair.b, pair.b_prime);
  const CMatrix product = kron_power(f_combine(pauli(Axis::X), pauli(Axis::Y)), 2);
  suite.add("f-of-pair-multiplicative", max_abs_diff(f, product), 1e-12);
  suite.add("b-prime-split-identity",
            max_abs_diff(pair.b_prime, hermitian_re(product) + hermitian_im(product)),
            1e-12);
}

std::vector<CorrelationRecord> tensor_records(const CorrelationTensor& tensor) {
  std::vector<CorrelationRecord> records;
  records.reserve(tensor.values.size());
  for (std::size_t mask = 0; mask < tensor.values.size(); ++mask) {
    std::string settings(static_cast<std::size_t>(tensor.n_sites), 'X');
    for (int site = 0; site < tensor.n_sites; ++site) {
      if ((mask >> (tensor.n_sites - 1 - site)) & 1u) {
        settings[static_cast<std::size_t>(site)] = 'Y';
      }
    }
    records.push_back({std::move(settings), tensor.values[mask]});
  }
  return records;
}

void analysis_checks(SuiteBuilder& suite, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    for (double v : coarse_grid()) {
      const double dense = mermin_expectation_dense(n, Visibility(v));
      const double factorized =
          mermin_expectation_factorized(n, Visibility(v));
      suite.add("dense-vs-factorized N=" + std::to_string(n) +
                    " V=" + grid_label(v),
                std::abs(dense - factorized), 1e-9);
    }
  }

  // The 2^{2N}-term expansion path is quadratic in the dense dimension; keep
  // it to 2N <= 8 regardless of max_n.
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    const BellOperatorPair pair = bell_mermin_product(2 * n);
    for (double v : coarse_grid()) {
      const DensityOperator rho = tensor_power(noisy_bell(Visibility(v)), n);
      const double via_correlations = expectation_from_correlations(
          pauli_expansion(pair), tensor_records(correlation_tensor(rho)));
      const double dense = mermin_expectation_dense(n, Visibility(v));
      suite.add("expansion-vs-dense N=" + std::to_string(n) +
                    " V=" + grid_label(v),
                std::abs(via_correlations - dense), 1e-9);
    }
  }

  double chsh_dev = 0.0;
  double mermin_excess = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double v = static_cast<double>(i) / 100.0;
    const auto reports = chsh_suite(noisy_bell(Visibility(v)));
    chsh_dev = std::max({chsh_dev, std::abs(reports[0].value - 2.0 * v),
                         std::abs(reports[1].value),
                         std::abs(reports[2].value),
                         std::abs(reports[3].value - 2.0 * v)});
    for (int n = 1; n <= max_n; ++n) {
      mermin_excess = std::max(
          mermin_excess,
          std::abs(mermin_expectation_factorized(n, Visibility(v))) - 1.0);
    }
  }
  suite.add("chsh-closed-form", chsh_dev, 1e-12);
  suite.add("mermin-never-violated", std::max(0.0, mermin_excess), 1e-12);

  for (int n = 1; n <= max_n; ++n) {
    const double t = threshold_visibility(n);
    if (t <= 1.0) {
      suite.add("zukowski-boundary N=" + std::to_string(n),
                std::abs(zukowski_expectation(n, Visibility(t)) - 1.0), 1e-9);
      const double below = zukowski_expectation(n, Visibility(t - 1e-3));
      const double above =
          zukowski_expectation(n, Visibility(std::min(1.0, t + 1e-3)));
      suite.add("zukowski-threshold-split N=" + std::to_string(n),
                std::max(std::max(0.0, below - 1.0),
                         std::max(0.0, 1.0 - above)),
                1e-12);
    }
  }
  double z1_max = 0.0;
  for (int i = 0; i <= 100; ++i) {
    z1_max = std::max(z1_max, zukowski_expectation(
                                  1, Visibility(static_cast<double>(i) / 100.0)));
  }
  suite.add("zukowski-n1-no-violation", std::max(0.0, z1_max - 1.0), 1e-12);

  double monotone = -std::numeric_limits<double>::infinity();
  for (int n = 1; n <= 100; ++n) {
    monotone = std::max(monotone,
                        threshold_visibility(n + 1) - threshold_visibility(n));
  }
  suite.add("threshold-strictly-decreasing", monotone, -1e-12);
  suite.add("threshold-asymptote",
            std::abs(threshold_visibility(1000) - asymptotic_threshold()),
            1e-3);
  suite.add("threshold-convergence-n50",
            threshold_visibility(50) - asymptotic_threshold(), 1e-2);

  double corr_excess = 0.0;
  for (double v : coarse_grid()) {
    const DensityOperator rho = noisy_bell(Visibility(v));
    for (double value : correlation_tensor(rho).values) {
      corr_excess = std::max(corr_excess, std::abs(value) - 1.0);
    }
  }
  suite.add("correlation-bounds", std::max(0.0, corr_excess), 1e-10);

  for (int n = 1; n <= std::min(max_n, 2); ++n) {
    for (double v : {0.5, 1.0}) {
      const DensityOperator rho = tensor_power(noisy_bell(Visibility(v)), n);
      const InequalityReport report =
          lhv_full_set_check(correlation_tensor(rho), n, v);
      suite.add("lhv-full-set N=" + std::to_string(n) + " V=" + grid_label(v),
                std::max(0.0, report.value - report.bound), 1e-12);
    }
  }
}

}  // namespace

std::vector<CheckResult> run_verification(int max_n,
                                          std::optional<double> tol_override) {
  if (max_n < 1) {
    throw DomainError("verify requires --max-n >= 1, got " +
                      std::to_string(max_n));
  }
  if (2 * max_n > dense_qubit_cap()) {
    throw SizeLimitError("verify --max-n " + std::to_string(max_n) +
                         " needs dense operators on " +
                         std::to_string(2 * max_n) +
                         " qubits, above the dense cap of " +
                         std::to_string(dense_qubit_cap()));
  }
  SuiteBuilder suite(tol_override);
  numerics_checks(suite);
  states_checks(suite, max_n);
  operators_checks(suite, max_n);
  analysis_checks(suite, max_n);
  return suite.take();
}

}  // namespace qbell::cli
