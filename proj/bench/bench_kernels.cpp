// Serial reference vs OpenMP kernels on the same inputs.
// Run: ./bench_kernels --benchmark_filter=Gate

#include <paraqt/circuit.hpp>
#include <paraqt/hamiltonian.hpp>
#include <paraqt/kernels.hpp>
#include <paraqt/weight_enumeration.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace paraqt;
namespace k = paraqt::kernels;

namespace {

std::vector<Complex> random_amps(int n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> g;
  std::vector<Complex> v(std::size_t{1} << n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

std::vector<k::GateOp> layer(int n) {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(2, 2);
  h << r, r, r, -r;
  ComplexMatrix cz = ComplexMatrix::Identity(4, 4);
  cz(3, 3) = -1.0;
  std::vector<k::GateOp> ops;
  for (int q = 0; q < n; ++q) ops.push_back({{q}, {}, h});
  for (int q = 0; q + 1 < n; q += 2) ops.push_back({{q, q + 1}, {}, cz});
  return ops;
}

std::vector<k::TermOp> heisenberg(int n) {
  ComplexMatrix xx_yy = ComplexMatrix::Zero(4, 4);
  xx_yy(1, 2) = xx_yy(2, 1) = 2.0;
  xx_yy(0, 0) = xx_yy(3, 3) = 1.0;
  xx_yy(1, 1) = xx_yy(2, 2) = -1.0;
  std::vector<k::TermOp> terms;
  for (int q = 0; q + 1 < n; ++q) terms.push_back({{q, q + 1}, xx_yy});
  return terms;
}

std::vector<k::ClassicalOp> adder(int width) {
  std::vector<k::ClassicalOp> ops;
  for (int q = 0; q + 2 < width; ++q) {
    ops.push_back({k::ClassicalOp::Kind::kFlip, qubit_mask(q, width) | qubit_mask(q + 1, width), qubit_mask(q + 2, width)});
    ops.push_back({k::ClassicalOp::Kind::kFlip, qubit_mask(q, width), qubit_mask(width - 1, width)});
  }
  return ops;
}

template <bool Parallel>
void BM_ApplyGates(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto amps = random_amps(n);
  const auto ops = layer(n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      k::omp::apply_gates(amps, n, ops);
    } else {
      k::serial::apply_gates(amps, n, ops);
    }
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ops.size()) * (std::int64_t{1} << n));
}

template <bool Parallel>
void BM_Expectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto amps = random_amps(n);
  const auto terms = heisenberg(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? k::omp::expectation(amps, n, terms) : k::serial::expectation(amps, n, terms));
  }
}

template <bool Parallel>
void BM_RestrictTerms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto members = WeightEnumeration(n, 3).members();
  const auto terms = heisenberg(n);
  for (auto _ : state) {
    auto m = Parallel ? k::omp::restrict_terms(n, members, terms) : k::serial::restrict_terms(n, members, terms);
    benchmark::DoNotOptimize(m.values.data());
  }
  state.counters["dim"] = static_cast<double>(members.size());
}

template <bool Parallel>
void BM_CountAccepting(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int width = p + 1;
  const auto ops = adder(width);
  const std::uint64_t accept = qubit_mask(width - 1, width);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? k::omp::count_accepting(ops, p, width, accept)
                                      : k::serial::count_accepting(ops, p, width, accept));
  }
}

template <bool Parallel>
void BM_SampleGap(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  const auto ops = adder(21);
  const std::uint64_t accept = qubit_mask(20, 21);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? k::omp::sample_gap(ops, 20, 21, accept, m, 7, 0)
                                      : k::serial::sample_gap(ops, 20, 21, accept, m, 7, 0));
  }
}

}  // namespace

BENCHMARK(BM_ApplyGates<false>)->Name("ApplyGates/serial")->DenseRange(14, 22, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApplyGates<true>)->Name("ApplyGates/omp")->DenseRange(14, 22, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Expectation<false>)->Name("Expectation/serial")->DenseRange(14, 22, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Expectation<true>)->Name("Expectation/omp")->DenseRange(14, 22, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RestrictTerms<false>)->Name("RestrictTerms/serial")->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RestrictTerms<true>)->Name("RestrictTerms/omp")->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CountAccepting<false>)->Name("CountAccepting/serial")->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountAccepting<true>)->Name("CountAccepting/omp")->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SampleGap<false>)->Name("SampleGap/serial")->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleGap<true>)->Name("SampleGap/omp")->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
