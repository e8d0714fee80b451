#include <paraqt/errors.hpp>
#include <paraqt/io.hpp>

#include <fstream>
#include <sstream>

namespace paraqt::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InvalidInput(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(where + ": missing field \"" + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) throw InvalidInput(where + "." + key + ": expected an integer");
  return v.get<int>();
}

double real_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number()) throw InvalidInput(where + "." + key + ": expected a number");
  return v.get<double>();
}

std::vector<int> int_list(const Json& v, const std::string& where) {
  if (!v.is_array()) throw InvalidInput(where + ": expected an array of integers");
  std::vector<int> out;
  for (const Json& x : v) {
    if (!x.is_number_integer()) throw InvalidInput(where + ": expected an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Json gates_to_json(const QuantumCircuit& c) {
  Json gates = Json::array();
  for (const Gate& g : c.gates()) {
    Json jg = {{"name", gate_name(g.kind)}, {"controls", g.controls}, {"targets", g.targets}};
    if (g.kind == GateKind::kUnitary) jg["matrix"] = matrix_to_json(g.matrix);
    gates.push_back(std::move(jg));
  }
  return gates;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw InvalidInput(where + ": expected [re, im] or a number");
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InvalidInput(where + ": expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  ComplexMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InvalidInput(where + ": rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_from_json(j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  return m;
}

Json state_to_json(const StateVector& s) {
  Json amps = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) amps.push_back(complex_to_json(s[i]));
  return {{"num_qubits", s.num_qubits()}, {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const Json& j) {
  const int n = int_field(j, "num_qubits", "state");
  if (n < 0 || n > 30) throw InvalidInput("state.num_qubits must lie in [0, 30]");
  const Json& amps = field(j, "amplitudes", "state");
  if (!amps.is_array() || amps.size() != (std::size_t{1} << n)) {
    throw InvalidInput("state.amplitudes must have 2^num_qubits entries");
  }
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = complex_from_json(amps[i], "state.amplitudes[" + std::to_string(i) + "]");
  }
  return StateVector(n, std::move(v));
}

Json hamiltonian_to_json(const LocalHamiltonian& h) {
  Json terms = Json::array();
  for (const LocalTerm& t : h.terms()) {
    Json jt = {{"qubits", t.support}, {"matrix", matrix_to_json(t.block)}};
    if (t.norm_bound) jt["norm_bound"] = *t.norm_bound;
    terms.push_back(std::move(jt));
  }
  return {{"n", h.n()}, {"locality", h.locality()}, {"a", h.a()}, {"b", h.b()}, {"terms", std::move(terms)}};
}

LocalHamiltonian hamiltonian_from_json(const Json& j) {
  const int n = int_field(j, "n", "hamiltonian");
  const int locality = int_field(j, "locality", "hamiltonian");
  const double a = real_field(j, "a", "hamiltonian");
  const double b = real_field(j, "b", "hamiltonian");
  const Json& jt = field(j, "terms", "hamiltonian");
  if (!jt.is_array()) throw InvalidInput("hamiltonian.terms: expected an array");
  std::vector<LocalTerm> terms;
  for (std::size_t i = 0; i < jt.size(); ++i) {
    const std::string where = "hamiltonian.terms[" + std::to_string(i) + "]";
    LocalTerm t;
    t.support = int_list(field(jt[i], "qubits", where), where + ".qubits");
    t.block = matrix_from_json(field(jt[i], "matrix", where), where + ".matrix");
    if (jt[i].contains("norm_bound")) t.norm_bound = real_field(jt[i], "norm_bound", where);
    terms.push_back(std::move(t));
  }
  return LocalHamiltonian(n, locality, std::move(terms), a, b);
}

Json circuit_to_json(const QuantumCircuit& c) {
  return {{"witness_qubits", c.witness_qubits()},
          {"ancilla_qubits", c.ancilla_qubits()},
          {"accept_qubit", c.accept_qubit()},
          {"gates", gates_to_json(c)}};
}

QuantumCircuit circuit_from_json(const Json& j) {
  const int witness = int_field(j, "witness_qubits", "circuit");
  const int ancilla = int_field(j, "ancilla_qubits", "circuit");
  const int accept = int_field(j, "accept_qubit", "circuit");
  const Json& jg = field(j, "gates", "circuit");
  if (!jg.is_array()) throw InvalidInput("circuit.gates: expected an array");
  std::vector<Gate> gates;
  for (std::size_t i = 0; i < jg.size(); ++i) {
    const std::string where = "circuit.gates[" + std::to_string(i) + "]";
    const Json& name = field(jg[i], "name", where);
    if (!name.is_string()) throw InvalidInput(where + ".name: expected a string");
    const auto kind = parse_gate_name(name.get<std::string>());
    if (!kind) throw InvalidInput(where + ".name: unknown gate \"" + name.get<std::string>() + "\"");
    Gate g{*kind, {}, {}, {}};
    if (jg[i].contains("controls")) g.controls = int_list(jg[i]["controls"], where + ".controls");
    g.targets = int_list(field(jg[i], "targets", where), where + ".targets");
    if (*kind == GateKind::kUnitary) g.matrix = matrix_from_json(field(jg[i], "matrix", where), where + ".matrix");
    gates.push_back(std::move(g));
  }
  return QuantumCircuit(witness, ancilla, accept, std::move(gates));
}

Json gap_instance_to_json(const GapInstance& g) {
  Json j = circuit_to_json(g.predicate());
  j["classical_only"] = true;
  return j;
}

GapInstance gap_instance_from_json(const Json& j) {
  const Json& flag = field(j, "classical_only", "gap instance");
  if (!flag.is_boolean() || !flag.get<bool>()) throw InvalidInput("gap instance: \"classical_only\" must be true");
  return GapInstance(circuit_from_json(j));
}

Json braid_to_json(const BraidWord& b) { return {{"strands", b.strands}, {"word", b.word}}; }

BraidWord braid_from_json(const Json& j) {
  BraidWord b{int_field(j, "strands", "braid"), int_list(field(j, "word", "braid"), "braid.word")};
  b.validate();
  return b;
}

Json report_to_json(const EstimateReport& r) {
  Json j;
  j["value"] = r.is_complex ? complex_to_json(r.value) : Json(r.value.real());
  j["tau"] = r.tau;
  j["delta"] = r.delta;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["mode"] = to_string(r.mode);
  j["bound"] = r.bound;
  if (r.warning) j["warning"] = r.note;
  return j;
}

EstimateReport report_from_json(const Json& j) {
  EstimateReport r;
  const Json& v = field(j, "value", "report");
  r.is_complex = v.is_array();
  r.value = complex_from_json(v, "report.value");
  r.tau = real_field(j, "tau", "report");
  r.delta = real_field(j, "delta", "report");
  const Json& samples = field(j, "samples", "report");
  const Json& seed = field(j, "seed", "report");
  if (!samples.is_number_unsigned() || !seed.is_number_unsigned()) {
    throw InvalidInput("report: samples and seed must be non-negative integers");
  }
  r.samples = samples.get<std::uint64_t>();
  r.seed = seed.get<std::uint64_t>();
  const Json& mode = field(j, "mode", "report");
  if (mode == "additive") {
    r.mode = EstimateMode::kAdditive;
  } else if (mode == "multiplicative") {
    r.mode = EstimateMode::kMultiplicative;
  } else {
    throw InvalidInput("report.mode must be \"additive\" or \"multiplicative\"");
  }
  if (j.contains("bound")) r.bound = real_field(j, "bound", "report");
  if (j.contains("warning")) {
    r.warning = true;
    r.note = j["warning"].is_string() ? j["warning"].get<std::string>() : "";
  }
  return r;
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(source + ": " + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

}  // namespace paraqt::io
