#include <paraqt/eigensolver.hpp>
#include <paraqt/errors.hpp>
#include <paraqt/estimators.hpp>
#include <paraqt/gadgets.hpp>
#include <paraqt/weight_enumeration.hpp>

#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace paraqt {

namespace {

constexpr double kDecisionSlack = 1e-12;

Verdict threshold(double value, double no_at_most, double yes_at_least) {
  if (value >= yes_at_least - kDecisionSlack) return Verdict::kYes;
  if (value <= no_at_most + kDecisionSlack) return Verdict::kNo;
  return Verdict::kPromiseViolated;
}

void check_thresholds(double a, double b) {
  if (!(std::isfinite(a) && std::isfinite(b) && b > a)) throw InvalidInput("thresholds need b > a");
}

double estimate_from_count(std::uint64_t count, std::uint64_t m) {
  return 2.0 * static_cast<double>(count) / static_cast<double>(m) - 1.0;
}

// Accepting rows of the columns obtained by running `circuit` on each input.
ComplexMatrix accepted_columns(const QuantumCircuit& circuit, const std::vector<std::uint64_t>& witnesses) {
  const int total = circuit.total_qubits();
  if (total > kMaxExactQubits) {
    throw ResourceError("exact verifier analysis limited to " + std::to_string(kMaxExactQubits) + " qubits");
  }
  std::vector<std::uint64_t> inputs(witnesses.size());
  for (std::size_t j = 0; j < witnesses.size(); ++j) inputs[j] = witnesses[j] << circuit.ancilla_qubits();
  ComplexMatrix cols = kernels::omp::simulate_basis_columns(circuit.gate_ops(), total, inputs);
  const std::uint64_t mask = qubit_mask(circuit.accept_qubit(), total);
  for (Eigen::Index x = 0; x < cols.rows(); ++x) {
    if (!(static_cast<std::uint64_t>(x) & mask)) cols.row(x).setZero();
  }
  return cols;
}

}  // namespace

std::uint64_t sample_count(double tau, double delta) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw InvalidInput("tau must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidInput("delta must lie in (0, 1)");
  const double raw = 2.0 * std::log(2.0 / delta) / (tau * tau);
  if (raw > 1e15) throw ResourceError("sample count too large");
  // ln(e^2) evaluates to 2 + 1 ulp; treat near-integers as integers.
  const double nearest = std::round(raw);
  const double m = std::abs(raw - nearest) <= 1e-9 * std::max(1.0, nearest) ? nearest : std::ceil(raw);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(m));
}

std::string to_string(EstimateMode mode) { return mode == EstimateMode::kAdditive ? "additive" : "multiplicative"; }

EstimateReport sample_amplitude(Complex q, double tau, double delta, std::uint64_t seed) {
  const std::uint64_t m = sample_count(tau, delta);
  const double p_re = std::clamp((1.0 + q.real()) / 2.0, 0.0, 1.0);
  const double p_im = std::clamp((1.0 + q.imag()) / 2.0, 0.0, 1.0);
  EstimateReport r;
  r.value = {estimate_from_count(kernels::omp::count_bernoulli(p_re, m, seed, 0), m),
             estimate_from_count(kernels::omp::count_bernoulli(p_im, m, seed, 1), m)};
  r.tau = tau;
  r.delta = delta;
  r.samples = m;
  r.seed = seed;
  r.bound = tau * std::numbers::sqrt2;
  return r;
}

EstimateReport estimate_amplitude(const ComplexMatrix& u, const QuantumCircuit& prep, double tau, double delta,
                                  std::uint64_t seed) {
  const double p_re = hadamard_zero_probability(hadamard_test_circuit(u, HadamardPart::kReal, prep));
  const double p_im = hadamard_zero_probability(hadamard_test_circuit(u, HadamardPart::kImag, prep));
  return sample_amplitude({2.0 * p_re - 1.0, 2.0 * p_im - 1.0}, tau, delta, seed);
}

EstimateReport estimate_amplitude_multiplicative(const ComplexMatrix& u, const QuantumCircuit& prep, double epsilon,
                                                 double delta, double lower_bound, std::uint64_t seed) {
  if (!(lower_bound > 0.0)) throw InvalidInput("lower bound L must be positive");
  if (!(epsilon > 0.0)) throw InvalidInput("epsilon must be positive");
  EstimateReport r = estimate_amplitude(u, prep, epsilon * lower_bound / std::numbers::sqrt2, delta, seed);
  r.mode = EstimateMode::kMultiplicative;
  if (std::abs(r.value) < lower_bound * (1.0 - epsilon)) {
    r.warning = true;
    r.note = "|estimate| below L(1 - epsilon); the lower bound on |q| is likely false";
  }
  return r;
}

GapInstance::GapInstance(QuantumCircuit predicate) : predicate_(std::move(predicate)) {
  if (!predicate_.is_classical()) throw InvalidInput("gap predicate may only use X, CX, Toffoli and SWAP gates");
  if (predicate_.witness_qubits() < 1) throw InvalidInput("gap predicate needs at least one path bit");
  ops_ = predicate_.classical_ops();
  accept_mask_ = qubit_mask(predicate_.accept_qubit(), predicate_.total_qubits());
}

std::int64_t exact_gap(const GapInstance& g) {
  const int p = g.path_bits();
  if (p > kMaxExactPathBits) throw ResourceError("exact_gap limited to 20 path bits");
  const std::uint64_t acc =
      kernels::omp::count_accepting(g.ops(), p, g.predicate().total_qubits(), g.accept_mask());
  return 2 * static_cast<std::int64_t>(acc) - (std::int64_t{1} << p);
}

EstimateReport estimate_gap(const GapInstance& g, double tau_rel, double delta, std::uint64_t seed) {
  const int p = g.path_bits();
  if (p > 62) throw ResourceError("path register wider than 62 bits");
  const std::uint64_t m = sample_count(tau_rel, delta);
  const std::int64_t sum =
      kernels::omp::sample_gap(g.ops(), p, g.predicate().total_qubits(), g.accept_mask(), m, seed, 0);
  const double scale = std::ldexp(1.0, p);
  EstimateReport r;
  r.value = scale * static_cast<double>(sum) / static_cast<double>(m);
  r.is_complex = false;
  r.tau = tau_rel;
  r.delta = delta;
  r.samples = m;
  r.seed = seed;
  r.bound = tau_rel * scale;
  return r;
}

QmakResult qmak_operator(const QuantumCircuit& verifier, int k) {
  if (verifier.witness_qubits() != k) throw InvalidInput("verifier witness register must have k qubits");
  std::vector<std::uint64_t> witnesses(std::size_t{1} << k);
  for (std::uint64_t j = 0; j < witnesses.size(); ++j) witnesses[j] = j;
  const ComplexMatrix cols = accepted_columns(verifier, witnesses);
  QmakResult r;
  r.q = cols.adjoint() * cols;
  r.trace = r.q.trace().real();
  r.probability = std::ldexp(r.trace, -k);
  return r;
}

QmakResult qmak_decide(const QuantumCircuit& verifier, int k, double a_trace, double b_trace) {
  check_thresholds(b_trace, a_trace);
  QmakResult r = qmak_operator(verifier, k);
  r.verdict = threshold(r.probability, std::ldexp(b_trace, -k), std::ldexp(a_trace, -k));
  return r;
}

EstimateReport qmak_sample(const QuantumCircuit& verifier, int k, double tau, double delta, std::uint64_t seed) {
  const QmakResult exact = qmak_operator(verifier, k);
  const std::uint64_t m = sample_count(tau, delta);
  const double p = std::clamp(exact.probability, 0.0, 1.0);
  EstimateReport r;
  r.value = static_cast<double>(kernels::omp::count_bernoulli(p, m, seed, 0)) / static_cast<double>(m);
  r.is_complex = false;
  r.tau = tau;
  r.delta = delta;
  r.samples = m;
  r.seed = seed;
  r.bound = tau / 2.0;  // 0/1 outcomes have half the range of +-1 ones
  return r;
}

double amplify_gap(double p1, int r) {
  if (r < 1 || r % 2 == 0) throw InvalidInput("repetitions must be a positive odd integer");
  if (!(p1 >= 0.0 && p1 <= 1.0)) throw InvalidInput("p1 must lie in [0, 1]");
  if (p1 == 0.0 || p1 == 1.0) return p1;
  const int h = (r + 1) / 2;
  return boost::math::ibeta(static_cast<double>(h), static_cast<double>(r - h + 1), p1);
}

WeightQcsResult decide_weight_qcs_exact(const QuantumCircuit& circuit, int k, double a, double b) {
  check_thresholds(a, b);
  const int n = circuit.witness_qubits();
  if (k < 0 || k > n) throw InvalidInput("need 0 <= k <= witness qubits");
  const WeightEnumeration e(n, k);
  if (e.dim() > kMaxWeightQcsDimension) throw ResourceError("C(n,k) exceeds 2048");
  const ComplexMatrix cols = accepted_columns(circuit, e.members());
  WeightQcsResult r{Verdict::kPromiseViolated, 0.0, e.dim(), cols.adjoint() * cols};
  r.m = (r.m + r.m.adjoint()).eval() / 2.0;
  r.lambda_max = max_eigenvalue(r.m);
  r.verdict = threshold(r.lambda_max, a, b);
  return r;
}

HammingQcsResult decide_hamming_weight_qcs_exact(const QuantumCircuit& circuit, int k, double a, double b) {
  check_thresholds(a, b);
  const int n = circuit.witness_qubits();
  if (k < 0 || k > n) throw InvalidInput("need 0 <= k <= witness qubits");
  const WeightEnumeration e(n, k);
  if (e.dim() > kMaxHammingQcsDimension) throw ResourceError("C(n,k) exceeds 4096");
  HammingQcsResult r{Verdict::kPromiseViolated, -1.0, "", {}};
  for (std::uint64_t x : e.members()) {
    const double p = acceptance_probability(circuit, StateVector::basis(n, x));
    r.table.emplace_back(format_bitstring(x, n), p);
    if (p > r.max_acceptance) {
      r.max_acceptance = p;
      r.best = r.table.back().first;
    }
  }
  r.verdict = threshold(r.max_acceptance, a, b);
  return r;
}

}  // namespace paraqt
