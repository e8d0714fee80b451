#include <paraqt/circuit.hpp>
#include <paraqt/errors.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

namespace paraqt {

namespace {

struct NameEntry {
  GateKind kind;
  const char* name;
};

constexpr NameEntry kNames[] = {{GateKind::kH, "H"},     {GateKind::kX, "X"},         {GateKind::kY, "Y"},
                                {GateKind::kZ, "Z"},     {GateKind::kS, "S"},         {GateKind::kSdg, "SDG"},
                                {GateKind::kT, "T"},     {GateKind::kCX, "CX"},       {GateKind::kCZ, "CZ"},
                                {GateKind::kSwap, "SWAP"}, {GateKind::kToffoli, "CCX"}, {GateKind::kUnitary, "UNITARY"}};

ComplexMatrix one_qubit(GateKind kind) {
  const Complex i{0.0, 1.0};
  const double r = 1.0 / std::numbers::sqrt2;
  ComplexMatrix m(2, 2);
  switch (kind) {
    case GateKind::kH:
      m << r, r, r, -r;
      break;
    case GateKind::kX:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case GateKind::kY:
      m << 0.0, -i, i, 0.0;
      break;
    case GateKind::kZ:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    case GateKind::kS:
      m << 1.0, 0.0, 0.0, i;
      break;
    case GateKind::kSdg:
      m << 1.0, 0.0, 0.0, -i;
      break;
    case GateKind::kT:
      m << 1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4);
      break;
    default:
      throw InvalidInput("not a one-qubit gate");
  }
  return m;
}

bool is_one_qubit(GateKind k) {
  return k == GateKind::kH || k == GateKind::kX || k == GateKind::kY || k == GateKind::kZ || k == GateKind::kS ||
         k == GateKind::kSdg || k == GateKind::kT;
}

void validate_gate(const Gate& g, int total, std::size_t index) {
  const std::string where = "gate " + std::to_string(index) + " (" + gate_name(g.kind) + "): ";
  const std::size_t nc = g.controls.size();
  const std::size_t nt = g.targets.size();
  bool shape_ok = false;
  if (is_one_qubit(g.kind)) {
    shape_ok = nc == 0 && nt == 1;
  } else if (g.kind == GateKind::kCX || g.kind == GateKind::kCZ) {
    shape_ok = nc == 1 && nt == 1;
  } else if (g.kind == GateKind::kSwap) {
    shape_ok = nc == 0 && nt == 2;
  } else if (g.kind == GateKind::kToffoli) {
    shape_ok = nc >= 2 && nt == 1;
  } else {
    shape_ok = nt >= 1;
  }
  if (!shape_ok) throw InvalidInput(where + "wrong number of controls/targets");

  std::set<int> wires;
  for (int w : g.controls) wires.insert(w);
  for (int w : g.targets) wires.insert(w);
  if (wires.size() != nc + nt) throw InvalidInput(where + "wires must be distinct");
  if (*wires.begin() < 0 || *wires.rbegin() >= total) throw InvalidInput(where + "wire index out of range");

  if (g.kind == GateKind::kUnitary) {
    const Eigen::Index dim = Eigen::Index{1} << nt;
    if (g.matrix.rows() != dim || g.matrix.cols() != dim) {
      throw InvalidInput(where + "matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (!is_unitary(g.matrix, 1e-10)) throw InvalidInput(where + "matrix is not unitary");
  }
}

}  // namespace

std::string gate_name(GateKind kind) {
  for (const NameEntry& e : kNames) {
    if (e.kind == kind) return e.name;
  }
  return "?";
}

std::optional<GateKind> parse_gate_name(const std::string& raw) {
  std::string name = raw;
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
  if (name == "TOFFOLI" || name == "MCX" || name == "CCNOT") return GateKind::kToffoli;
  if (name == "CNOT") return GateKind::kCX;
  if (name == "S_DAG" || name == "SDAG") return GateKind::kSdg;
  for (const NameEntry& e : kNames) {
    if (name == e.name) return e.kind;
  }
  return std::nullopt;
}

Gate Gate::named(GateKind kind, int target) {
  if (!is_one_qubit(kind)) throw InvalidInput("Gate::named expects a one-qubit gate");
  return {kind, {}, {target}, {}};
}

Gate Gate::cx(int control, int target) { return {GateKind::kCX, {control}, {target}, {}}; }
Gate Gate::cz(int control, int target) { return {GateKind::kCZ, {control}, {target}, {}}; }
Gate Gate::swap(int a, int b) { return {GateKind::kSwap, {}, {a, b}, {}}; }
Gate Gate::toffoli(std::vector<int> controls, int target) { return {GateKind::kToffoli, std::move(controls), {target}, {}}; }

Gate Gate::unitary(ComplexMatrix u, std::vector<int> targets, std::vector<int> controls) {
  return {GateKind::kUnitary, std::move(controls), std::move(targets), std::move(u)};
}

bool Gate::is_classical() const {
  return kind == GateKind::kX || kind == GateKind::kCX || kind == GateKind::kToffoli || kind == GateKind::kSwap;
}

ComplexMatrix Gate::target_matrix() const {
  if (is_one_qubit(kind)) return one_qubit(kind);
  switch (kind) {
    case GateKind::kCX:
    case GateKind::kToffoli:
      return one_qubit(GateKind::kX);
    case GateKind::kCZ:
      return one_qubit(GateKind::kZ);
    case GateKind::kSwap: {
      ComplexMatrix m = ComplexMatrix::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
      return m;
    }
    case GateKind::kUnitary:
      return matrix;
    default:
      break;
  }
  throw InvalidInput("unknown gate kind");
}

QuantumCircuit::QuantumCircuit(int witness_qubits, int ancilla_qubits, int accept_qubit, std::vector<Gate> gates)
    : witness_(witness_qubits), ancilla_(ancilla_qubits), accept_(accept_qubit), gates_(std::move(gates)) {
  if (witness_ < 0 || ancilla_ < 0) throw InvalidInput("qubit counts must be non-negative");
  if (total_qubits() < 1) throw InvalidInput("circuit needs at least one wire");
  if (total_qubits() > 62) throw ResourceError("circuit wider than 62 wires");
  if (accept_ < 0 || accept_ >= total_qubits()) throw InvalidInput("accept_qubit out of range");
  for (std::size_t i = 0; i < gates_.size(); ++i) validate_gate(gates_[i], total_qubits(), i);
}

bool QuantumCircuit::is_classical() const {
  return std::all_of(gates_.begin(), gates_.end(), [](const Gate& g) { return g.is_classical(); });
}

std::vector<kernels::GateOp> QuantumCircuit::gate_ops() const {
  std::vector<kernels::GateOp> ops;
  ops.reserve(gates_.size());
  for (const Gate& g : gates_) ops.push_back({g.targets, g.controls, g.target_matrix()});
  return ops;
}

std::vector<kernels::ClassicalOp> QuantumCircuit::classical_ops() const {
  const int n = total_qubits();
  std::vector<kernels::ClassicalOp> ops;
  ops.reserve(gates_.size());
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    if (!g.is_classical()) {
      throw InvalidInput("gate " + std::to_string(i) + " (" + gate_name(g.kind) + ") is not classical");
    }
    kernels::ClassicalOp op;
    if (g.kind == GateKind::kSwap) {
      op.kind = kernels::ClassicalOp::Kind::kSwap;
      op.swap_a = qubit_mask(g.targets[0], n);
      op.swap_b = qubit_mask(g.targets[1], n);
    } else {
      for (int c : g.controls) op.control_mask |= qubit_mask(c, n);
      op.target_mask = qubit_mask(g.targets[0], n);
    }
    ops.push_back(op);
  }
  return ops;
}

StateVector simulate(const QuantumCircuit& circuit, const StateVector& input) {
  if (input.num_qubits() != circuit.witness_qubits()) {
    throw InvalidInput("input has " + std::to_string(input.num_qubits()) + " qubits, circuit expects " +
                       std::to_string(circuit.witness_qubits()));
  }
  if (circuit.total_qubits() > kMaxSimulatedQubits) {
    throw ResourceError("simulation limited to " + std::to_string(kMaxSimulatedQubits) + " qubits");
  }
  StateVector state = input.tensor(StateVector(circuit.ancilla_qubits()));
  const std::vector<kernels::GateOp> ops = circuit.gate_ops();
  ComplexVector& amps = state.amplitudes();
  kernels::omp::apply_gates(std::span<Complex>(amps.data(), state.dim()), state.num_qubits(), ops);
  return state;
}

double acceptance_probability(const QuantumCircuit& circuit, const StateVector& input) {
  const StateVector out = simulate(circuit, input);
  const ComplexVector& a = out.amplitudes();
  return kernels::omp::probability_one(std::span<const Complex>(a.data(), out.dim()), out.num_qubits(),
                                       circuit.accept_qubit());
}

ComplexMatrix circuit_unitary(const QuantumCircuit& circuit) {
  if (circuit.total_qubits() > kMaxUnitaryQubits) {
    throw ResourceError("circuit_unitary limited to " + std::to_string(kMaxUnitaryQubits) + " qubits");
  }
  const std::uint64_t dim = std::uint64_t{1} << circuit.total_qubits();
  std::vector<std::uint64_t> inputs(dim);
  std::iota(inputs.begin(), inputs.end(), std::uint64_t{0});
  return kernels::omp::simulate_basis_columns(circuit.gate_ops(), circuit.total_qubits(), inputs);
}

CircuitMetrics circuit_metrics(const QuantumCircuit& circuit) {
  // Longest-path DP in gate order: frontier[w] is the best count over paths
  // that end at the current position of wire w.
  const auto wires = static_cast<std::size_t>(circuit.total_qubits());
  std::vector<int> weft(wires, 0);
  std::vector<int> depth(wires, 0);
  for (const Gate& g : circuit.gates()) {
    int w_in = 0;
    int d_in = 0;
    auto visit = [&](int q) {
      w_in = std::max(w_in, weft[static_cast<std::size_t>(q)]);
      d_in = std::max(d_in, depth[static_cast<std::size_t>(q)]);
    };
    for (int q : g.controls) visit(q);
    for (int q : g.targets) visit(q);
    const int w_out = w_in + (g.is_large() ? 1 : 0);
    const int d_out = d_in + 1;
    for (int q : g.controls) weft[static_cast<std::size_t>(q)] = w_out, depth[static_cast<std::size_t>(q)] = d_out;
    for (int q : g.targets) weft[static_cast<std::size_t>(q)] = w_out, depth[static_cast<std::size_t>(q)] = d_out;
  }
  CircuitMetrics m;
  m.size = static_cast<int>(circuit.gates().size());
  if (wires) {
    m.weft = *std::max_element(weft.begin(), weft.end());
    m.depth = *std::max_element(depth.begin(), depth.end());
  }
  return m;
}

}  // namespace paraqt
