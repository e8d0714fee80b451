#pragma once

#include <paraqt/circuit.hpp>
#include <paraqt/hamiltonian.hpp>
#include <paraqt/linalg.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace paraqt {

/// Hoeffding schedule for a mean of +-1 variables: m = ceil(2 ln(2/delta) / tau^2).
std::uint64_t sample_count(double tau, double delta);

enum class EstimateMode { kAdditive, kMultiplicative };
std::string to_string(EstimateMode mode);

struct EstimateReport {
  Complex value;
  bool is_complex = true;
  double tau = 0.0;
  double delta = 0.0;
  std::uint64_t samples = 0;  // per estimated real quantity
  std::uint64_t seed = 0;
  EstimateMode mode = EstimateMode::kAdditive;
  double bound = 0.0;  // additive error guaranteed at confidence 1 - 2 delta
  bool warning = false;
  std::string note;
};

/// Samples the two Hadamard tests for an amplitude whose exact value is `q`.
/// Real part uses stream 0 and imaginary part stream 1 of `seed`.
EstimateReport sample_amplitude(Complex q, double tau, double delta, std::uint64_t seed);

/// Estimates <psi|U|psi>, psi = prep|0^m>, from Hadamard-test statistics.
EstimateReport estimate_amplitude(const ComplexMatrix& u, const QuantumCircuit& prep, double tau, double delta,
                                  std::uint64_t seed);

/// Multiplicative epsilon-approximation assuming |q| >= lower_bound.
EstimateReport estimate_amplitude_multiplicative(const ComplexMatrix& u, const QuantumCircuit& prep, double epsilon,
                                                 double delta, double lower_bound, std::uint64_t seed);

/// Deterministic predicate over p path bits: the witness register of a
/// classical reversible circuit, ancillas starting at 0.
class GapInstance {
 public:
  explicit GapInstance(QuantumCircuit predicate);

  int path_bits() const noexcept { return predicate_.witness_qubits(); }
  const QuantumCircuit& predicate() const noexcept { return predicate_; }
  const std::vector<kernels::ClassicalOp>& ops() const noexcept { return ops_; }
  std::uint64_t accept_mask() const noexcept { return accept_mask_; }

 private:
  QuantumCircuit predicate_;
  std::vector<kernels::ClassicalOp> ops_;
  std::uint64_t accept_mask_;
};

inline constexpr int kMaxExactPathBits = 20;

/// #accepting - #rejecting paths.
std::int64_t exact_gap(const GapInstance& instance);

/// g~ = (2^p / m) sum X_i over m uniformly sampled paths.
EstimateReport estimate_gap(const GapInstance& instance, double tau_rel, double delta, std::uint64_t seed);

struct QmakResult {
  ComplexMatrix q;
  double trace = 0.0;
  double probability = 0.0;  // 2^-k Tr(Q)
  Verdict verdict = Verdict::kPromiseViolated;
};

inline constexpr int kMaxExactQubits = 12;

/// Q(i, j) = <i,0| A^dag Pi_1 A |j,0> over the k witness qubits.
QmakResult qmak_operator(const QuantumCircuit& verifier, int k);

/// Exact acceptance on the maximally mixed witness. YES iff Pr >= a_trace 2^-k,
/// NO iff Pr <= b_trace 2^-k.
QmakResult qmak_decide(const QuantumCircuit& verifier, int k, double a_trace = 2.0 / 3.0,
                       double b_trace = 1.0 / 3.0);

/// Sampled variant: estimates Pr[B accepts] with m(tau, delta) runs on fresh
/// maximally mixed witnesses.
EstimateReport qmak_sample(const QuantumCircuit& verifier, int k, double tau, double delta, std::uint64_t seed);

/// Majority of r independent runs: sum_{j > r/2} C(r,j) p^j (1-p)^(r-j).
double amplify_gap(double p1, int repetitions);

struct WeightQcsResult {
  Verdict verdict;
  double lambda_max;
  std::uint64_t dimension;
  ComplexMatrix m;  // acceptance operator on the weight-k sector, rank basis
};

inline constexpr std::uint64_t kMaxWeightQcsDimension = 2048;
inline constexpr std::uint64_t kMaxHammingQcsDimension = 4096;

/// Max acceptance over weight-k superposition witnesses; YES iff >= b, NO iff <= a.
WeightQcsResult decide_weight_qcs_exact(const QuantumCircuit& circuit, int k, double a, double b);

struct HammingQcsResult {
  Verdict verdict;
  double max_acceptance;
  std::string best;
  std::vector<std::pair<std::string, double>> table;  // rank order
};

/// Max acceptance over weight-k basis witnesses; YES iff >= b, NO iff <= a.
HammingQcsResult decide_hamming_weight_qcs_exact(const QuantumCircuit& circuit, int k, double a, double b);

}  // namespace paraqt
