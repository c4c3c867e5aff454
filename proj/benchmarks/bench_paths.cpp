#include <benchmark/benchmark.h>

#include "qbell/analysis.hpp"

namespace {

using namespace qbell;

void BM_MerminExpectationDense(benchmark::State& state) {
  const int n_copies = static_cast<int>(state.range(0));
  const Visibility v(0.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mermin_expectation_dense(n_copies, v));
  }
}
BENCHMARK(BM_MerminExpectationDense)->DenseRange(1, 5);

void BM_MerminExpectationFactorized(benchmark::State& state) {
  const int n_copies = static_cast<int>(state.range(0));
  const Visibility v(0.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mermin_expectation_factorized(n_copies, v));
  }
}
BENCHMARK(BM_MerminExpectationFactorized)->RangeMultiplier(10)->Range(1, 1000000);

void BM_BellMerminProduct(benchmark::State& state) {
  const int n_qubits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bell_mermin_product(n_qubits));
  }
}
BENCHMARK(BM_BellMerminProduct)->DenseRange(2, 10, 2);

void BM_BellMerminClosedForm(benchmark::State& state) {
  const int n_qubits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bell_mermin_closed_form(n_qubits));
  }
}
BENCHMARK(BM_BellMerminClosedForm)->DenseRange(2, 10, 2);

void BM_PauliExpansion(benchmark::State& state) {
  const int n_qubits = static_cast<int>(state.range(0));
  const BellOperatorPair pair = bell_mermin_product(n_qubits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pauli_expansion(pair));
  }
}
BENCHMARK(BM_PauliExpansion)->DenseRange(2, 8, 2);

void BM_LhvFullSetCheck(benchmark::State& state) {
  const int n_copies = static_cast<int>(state.range(0));
  const CorrelationTensor tensor =
      correlation_tensor(tensor_power(noisy_bell(Visibility(0.9)), n_copies));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lhv_full_set_check(tensor, n_copies, 0.9));
  }
}
BENCHMARK(BM_LhvFullSetCheck)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
