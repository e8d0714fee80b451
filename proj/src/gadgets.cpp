#include <paraqt/errors.hpp>
#include <paraqt/gadgets.hpp>
#include <paraqt/weight_enumeration.hpp>

#include <algorithm>
#include <cmath>

namespace paraqt {

WeightProjection project_weight_k(const StateVector& state, int k) {
  const int n = state.num_qubits();
  ComplexVector out = ComplexVector::Zero(static_cast<Eigen::Index>(state.dim()));
  double prob = 0.0;
  if (k >= 0 && k <= n) {
    for (std::uint64_t x = 0; x < state.dim(); ++x) {
      if (hamming_weight(x) != k) continue;
      const Complex a = state[x];
      out[static_cast<Eigen::Index>(x)] = a;
      prob += std::norm(a);
    }
  }
  if (prob == 0.0) return {StateVector(n, std::move(out)), 0.0, true};
  out /= std::sqrt(prob);
  return {StateVector(n, std::move(out)), prob, false};
}

StateVector encode_weight_witness(int n, int k, const StateVector& state) {
  if (state.num_qubits() != n) throw InvalidInput("state must have n qubits");
  const WeightEnumeration e(n, k);
  const int m = index_bits(e.dim());
  ComplexVector out = ComplexVector::Zero(Eigen::Index{1} << m);
  for (std::uint64_t x = 0; x < state.dim(); ++x) {
    const Complex a = state[x];
    if (hamming_weight(x) == k) {
      out[static_cast<Eigen::Index>(e.rank(x))] = a;
    } else if (std::abs(a) > kSupportTolerance) {
      throw InvalidInput("amplitude on |" + format_bitstring(x, n) + "> lies outside weight " + std::to_string(k));
    }
  }
  return StateVector(m, std::move(out));
}

StateVector decode_weight_witness(int n, int k, const StateVector& compressed) {
  const WeightEnumeration e(n, k);
  const int m = index_bits(e.dim());
  if (compressed.num_qubits() != m) {
    throw InvalidInput("compressed state must have " + std::to_string(m) + " qubits");
  }
  if (n > 30) throw ResourceError("decoded state wider than 30 qubits");
  ComplexVector out = ComplexVector::Zero(Eigen::Index{1} << n);
  for (std::uint64_t r = 0; r < compressed.dim(); ++r) {
    const Complex a = compressed[r];
    if (r < e.dim()) {
      out[static_cast<Eigen::Index>(e.unrank(r))] = a;
    } else if (std::abs(a) > kSupportTolerance) {
      throw InvalidInput("amplitude on padded index " + std::to_string(r));
    }
  }
  return StateVector(n, std::move(out));
}

StateVector permute_qubits(const StateVector& state, const std::vector<int>& perm) {
  const int n = state.num_qubits();
  if (static_cast<int>(perm.size()) != n) throw InvalidInput("permutation length must equal qubit count");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) throw InvalidInput("not a permutation of the qubits");
    seen[static_cast<std::size_t>(p)] = true;
  }
  ComplexVector out(static_cast<Eigen::Index>(state.dim()));
  for (std::uint64_t x = 0; x < state.dim(); ++x) {
    std::uint64_t y = 0;
    for (int j = 0; j < n; ++j) {
      if (x & qubit_mask(j, n)) y |= qubit_mask(perm[static_cast<std::size_t>(j)], n);
    }
    out[static_cast<Eigen::Index>(y)] = state[x];
  }
  return StateVector(n, std::move(out));
}

StateVector prepare_classical_weight_state(int n, int k, const QuantumCircuit& generator,
                                           const std::vector<int>& perm) {
  if (k < 0 || k > n) throw InvalidInput("need 0 <= k <= n");
  if (generator.total_qubits() != k && !(k == 0 && generator.gates().empty())) {
    throw InvalidInput("generator must act on exactly k qubits");
  }
  if (static_cast<int>(perm.size()) != n) throw InvalidInput("permutation length must equal n");
  StateVector head(0);
  if (k > 0) head = simulate(generator, StateVector(generator.witness_qubits()));
  return permute_qubits(head.tensor(StateVector(n - k)), perm);
}

std::optional<std::string> one_hot_block_decode(int num_blocks, int block_size, const std::string& bits) {
  if (num_blocks < 0 || block_size < 1) throw InvalidInput("need num_blocks >= 0 and block_size >= 1");
  if (bits.size() != static_cast<std::size_t>(num_blocks) * static_cast<std::size_t>(block_size)) {
    throw InvalidInput("bitstring length must be num_blocks * block_size");
  }
  const int width = index_bits(static_cast<std::uint64_t>(block_size));
  std::string out;
  for (int b = 0; b < num_blocks; ++b) {
    int pos = -1;
    for (int j = 0; j < block_size; ++j) {
      const char c = bits[static_cast<std::size_t>(b * block_size + j)];
      if (c != '0' && c != '1') throw InvalidInput("bitstring may only contain 0 and 1");
      if (c == '1') {
        if (pos >= 0) return std::nullopt;
        pos = j;
      }
    }
    if (pos < 0) return std::nullopt;
    out += format_bitstring(static_cast<std::uint64_t>(pos), width);
  }
  return out;
}

QuantumCircuit identity_prep(int num_qubits) { return QuantumCircuit(0, num_qubits, 0, {}); }

StateVector prepared_state(const QuantumCircuit& prep) {
  return simulate(prep, StateVector(prep.witness_qubits()));
}

QuantumCircuit hadamard_test_circuit(const ComplexMatrix& u, HadamardPart part, const QuantumCircuit& prep) {
  const int m = prep.total_qubits();
  if (u.rows() != u.cols() || u.rows() != (Eigen::Index{1} << m)) {
    throw InvalidInput("U must be 2^m x 2^m for the m-qubit preparation circuit");
  }
  if (!is_unitary(u, 1e-10)) throw InvalidInput("U is not unitary");

  std::vector<Gate> gates;
  for (Gate g : prep.gates()) {
    for (int& q : g.controls) ++q;
    for (int& q : g.targets) ++q;
    gates.push_back(std::move(g));
  }
  gates.push_back(Gate::named(GateKind::kH, 0));
  if (part == HadamardPart::kImag) gates.push_back(Gate::named(GateKind::kSdg, 0));
  std::vector<int> system(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) system[static_cast<std::size_t>(j)] = j + 1;
  gates.push_back(Gate::unitary(u, system, {0}));
  gates.push_back(Gate::named(GateKind::kH, 0));
  return QuantumCircuit(0, 1 + m, 0, std::move(gates));
}

double hadamard_zero_probability(const QuantumCircuit& test) {
  return std::clamp(1.0 - acceptance_probability(test, StateVector(0)), 0.0, 1.0);
}

}  // namespace paraqt
