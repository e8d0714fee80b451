#include <paraqt/cli.hpp>
#include <paraqt/errors.hpp>
#include <paraqt/estimators.hpp>
#include <paraqt/gadgets.hpp>
#include <paraqt/weight_enumeration.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>

namespace paraqt::cli {

namespace {

using io::Json;

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::kYes:
      return kYes;
    case Verdict::kNo:
      return kNo;
    default:
      return kPromiseViolated;
  }
}

Json echo(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["input"] = c.input;
  j["tau"] = c.tau;
  j["delta"] = c.delta;
  j["seed"] = c.seed ? Json(*c.seed) : Json();
  j["k"] = c.k ? Json(*c.k) : Json();
  j["mode"] = c.mode;
  j["a"] = c.a ? Json(*c.a) : Json();
  j["b"] = c.b ? Json(*c.b) : Json();
  j["n"] = c.n ? Json(*c.n) : Json();
  j["blocks"] = c.blocks;
  j["block_size"] = c.block_size;
  j["bits"] = c.bits;
  j["lower_bound"] = c.lower_bound;
  return j;
}

int require_k(const RunConfig& c) {
  if (!c.k) throw InvalidInput("--k is required for " + c.command);
  return *c.k;
}

double require(const std::optional<double>& v, const char* flag, const RunConfig& c) {
  if (!v) throw InvalidInput(std::string(flag) + " is required for " + c.command);
  return *v;
}

std::string mode_or(const RunConfig& c, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string m = c.mode.empty() ? fallback : c.mode;
  for (const char* a : allowed) {
    if (m == a) return m;
  }
  throw InvalidInput("--mode " + m + " is not valid for " + c.command);
}

Json input_json(const RunConfig& c) {
  if (c.input.empty()) throw InvalidInput("--input is required for " + c.command);
  return io::read_file(c.input);
}

Outcome ham_common(const RunConfig& c, bool decide) {
  const Json j = input_json(c);
  LocalHamiltonian h = io::hamiltonian_from_json(j);
  if (c.a || c.b) {
    h = LocalHamiltonian(h.n(), h.locality(), h.terms(), c.a.value_or(h.a()), c.b.value_or(h.b()));
  }
  const std::string m = mode_or(c, "auto", {"auto", "dense", "iterative"});
  const EigenMode mode = m == "dense" ? EigenMode::kDense : (m == "iterative" ? EigenMode::kIterative : EigenMode::kAuto);
  const HamiltonianDecision d = decide_weight_k_local_hamiltonian(h, require_k(c), mode);
  Outcome o;
  o.report["lambda_min"] = d.lambda_min;
  o.report["dimension"] = d.dimension;
  if (decide) {
    o.report["a"] = h.a();
    o.report["b"] = h.b();
    o.report["verdict"] = to_string(d.verdict);
    o.exit_code = verdict_exit(d.verdict);
  }
  return o;
}

Outcome amp_estimate(const RunConfig& c) {
  const Json j = input_json(c);
  ComplexMatrix u;
  if (j.contains("unitary")) {
    u = io::matrix_from_json(j["unitary"], "unitary");
  } else if (j.contains("circuit")) {
    u = circuit_unitary(io::circuit_from_json(j["circuit"]));
  } else {
    throw InvalidInput("amplitude input needs \"unitary\" or \"circuit\"");
  }
  if (u.rows() != u.cols() || u.rows() < 2 || (u.rows() & (u.rows() - 1)) != 0) {
    throw InvalidInput("unitary must be square with a power-of-two dimension");
  }
  const int m = index_bits(static_cast<std::uint64_t>(u.rows()));
  const QuantumCircuit prep = j.contains("prep") ? io::circuit_from_json(j["prep"]) : identity_prep(m);
  const std::string mode = mode_or(c, "additive", {"additive", "multiplicative"});
  const EstimateReport r = mode == "additive"
                               ? estimate_amplitude(u, prep, c.tau, c.delta, *c.seed)
                               : estimate_amplitude_multiplicative(u, prep, c.tau, c.delta, c.lower_bound, *c.seed);
  return {kYes, io::report_to_json(r)};
}

Outcome gapp_estimate(const RunConfig& c) {
  const GapInstance g = io::gap_instance_from_json(input_json(c));
  Outcome o{kYes, io::report_to_json(estimate_gap(g, c.tau, c.delta, *c.seed))};
  o.report["path_bits"] = g.path_bits();
  return o;
}

Outcome gapp_exact(const RunConfig& c) {
  const GapInstance g = io::gap_instance_from_json(input_json(c));
  Outcome o;
  o.report["gap"] = exact_gap(g);
  o.report["path_bits"] = g.path_bits();
  return o;
}

Outcome qmak(const RunConfig& c) {
  const QuantumCircuit v = io::circuit_from_json(input_json(c));
  const int k = c.k.value_or(v.witness_qubits());
  const double a = c.a.value_or(2.0 / 3.0);
  const double b = c.b.value_or(1.0 / 3.0);
  const std::string mode = mode_or(c, "exact", {"exact", "sampled"});
  Outcome o;
  if (mode == "exact") {
    const QmakResult r = qmak_decide(v, k, a, b);
    o.report["probability"] = r.probability;
    o.report["trace"] = r.trace;
    o.report["verdict"] = to_string(r.verdict);
    o.exit_code = verdict_exit(r.verdict);
  } else {
    if (!(a > b)) throw InvalidInput("qmak thresholds need a > b");
    const EstimateReport r = qmak_sample(v, k, c.tau, c.delta, *c.seed);
    const double cut = std::ldexp((a + b) / 2.0, -k);
    const Verdict verdict = r.value.real() >= cut ? Verdict::kYes : Verdict::kNo;
    o.report = io::report_to_json(r);
    o.report["threshold"] = cut;
    o.report["verdict"] = to_string(verdict);
    o.exit_code = verdict_exit(verdict);
  }
  return o;
}

Outcome weft(const RunConfig& c) {
  const CircuitMetrics m = circuit_metrics(io::circuit_from_json(input_json(c)));
  Outcome o;
  o.report["weft"] = m.weft;
  o.report["depth"] = m.depth;
  o.report["size"] = m.size;
  return o;
}

Outcome encode(const RunConfig& c) {
  const StateVector s = io::state_from_json(input_json(c));
  return {kYes, {{"state", io::state_to_json(encode_weight_witness(s.num_qubits(), require_k(c), s))}}};
}

Outcome decode(const RunConfig& c) {
  if (!c.n) throw InvalidInput("--n is required for decode-witness");
  const StateVector s = io::state_from_json(input_json(c));
  return {kYes, {{"state", io::state_to_json(decode_weight_witness(*c.n, require_k(c), s))}}};
}

Outcome onehot(const RunConfig& c) {
  const auto decoded = one_hot_block_decode(c.blocks, c.block_size, c.bits);
  Outcome o;
  o.report["decoded"] = decoded ? Json(*decoded) : Json("REJECT");
  o.exit_code = decoded ? kYes : kNo;
  return o;
}

Outcome wqcs(const RunConfig& c) {
  const QuantumCircuit circ = io::circuit_from_json(input_json(c));
  const WeightQcsResult r =
      decide_weight_qcs_exact(circ, require_k(c), require(c.a, "--a", c), require(c.b, "--b", c));
  Outcome o;
  o.report["lambda_max"] = r.lambda_max;
  o.report["dimension"] = r.dimension;
  o.report["verdict"] = to_string(r.verdict);
  o.exit_code = verdict_exit(r.verdict);
  return o;
}

Outcome hwqcs(const RunConfig& c) {
  const QuantumCircuit circ = io::circuit_from_json(input_json(c));
  const HammingQcsResult r =
      decide_hamming_weight_qcs_exact(circ, require_k(c), require(c.a, "--a", c), require(c.b, "--b", c));
  Outcome o;
  o.report["max_acceptance"] = r.max_acceptance;
  o.report["best"] = r.best;
  Json table = Json::array();
  for (const auto& [s, p] : r.table) table.push_back({{"string", s}, {"acceptance", p}});
  o.report["table"] = std::move(table);
  o.report["verdict"] = to_string(r.verdict);
  o.exit_code = verdict_exit(r.verdict);
  return o;
}

Outcome jones(const RunConfig& c) {
  const BraidWord b = io::braid_from_json(input_json(c));
  const JonesReport r = estimate_jones(b, require_k(c), c.tau, c.delta, *c.seed);
  Outcome o;
  o.report["jones"] = io::complex_to_json(r.estimate.value);
  o.report["bound"] = r.estimate.bound;
  o.report["writhe"] = r.writhe;
  o.report["k"] = r.k;
  o.report["amplitude"] = io::complex_to_json(r.amplitude);
  o.report["samples"] = r.estimate.samples;
  o.report["word_length"] = b.word.size();
  o.report["strands"] = b.strands;
  return o;
}

Outcome jones_exact_cmd(const RunConfig& c) {
  const BraidWord b = io::braid_from_json(input_json(c));
  const int k = require_k(c);
  Outcome o;
  o.report["jones"] = io::complex_to_json(jones_exact(b, k));
  o.report["writhe"] = writhe(b);
  o.report["k"] = k;
  o.report["components"] = plat_closure(b).components;
  return o;
}

const std::map<std::string, std::function<Outcome(const RunConfig&)>>& commands() {
  static const std::map<std::string, std::function<Outcome(const RunConfig&)>> table{
      {"ham-min", [](const RunConfig& c) { return ham_common(c, false); }},
      {"ham-decide", [](const RunConfig& c) { return ham_common(c, true); }},
      {"amp-estimate", amp_estimate},
      {"gapp-estimate", gapp_estimate},
      {"gapp-exact", gapp_exact},
      {"qmak-decide", qmak},
      {"weft", weft},
      {"encode-witness", encode},
      {"decode-witness", decode},
      {"onehot-decode", onehot},
      {"wqcs-decide", wqcs},
      {"hwqcs-decide", hwqcs},
      {"jones", jones},
      {"jones-exact", jones_exact_cmd},
  };
  return table;
}

void emit(const RunConfig& c, const Json& report, std::ostream& out) {
  const std::string text = c.compact ? report.dump() : report.dump(2);
  if (c.output.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw InvalidInput("cannot write " + c.output);
  f << text << '\n';
}

}  // namespace

Outcome dispatch(const RunConfig& config) {
  const auto it = commands().find(config.command);
  if (it == commands().end()) throw InvalidInput("unknown command " + config.command);
  RunConfig c = config;
  if (!c.seed) throw InvalidInput("dispatch needs a resolved seed");
  if (c.mode.empty()) {
    static const std::map<std::string, std::string> defaults{
        {"ham-min", "auto"}, {"ham-decide", "auto"}, {"amp-estimate", "additive"}, {"qmak-decide", "exact"}};
    if (const auto d = defaults.find(c.command); d != defaults.end()) c.mode = d->second;
  }
  Outcome o = it->second(c);
  Json report;
  report["config"] = echo(c);
  for (auto& [key, value] : o.report.items()) report[key] = value;
  o.report = std::move(report);
  return o;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parameterized quantum complexity toolkit"};
  app.require_subcommand(1);
  RunConfig c;
  std::uint64_t seed = 0;

  for (const auto& [name, fn] : commands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", c.input, "input JSON file");
    sub->add_option("--output", c.output, "write the report here instead of stdout");
    sub->add_option("--tau", c.tau, "additive error (epsilon in multiplicative mode)");
    sub->add_option("--delta", c.delta, "failure probability");
    sub->add_option("--seed", seed, "RNG seed; drawn and reported when absent");
    sub->add_option("--k", c.k, "weight / witness size / Jones level");
    sub->add_option("--mode", c.mode, "exact|sampled, dense|iterative|auto, additive|multiplicative");
    sub->add_flag("--json", c.compact, "single-line JSON output");
    sub->add_option("--a", c.a, "completeness/soundness threshold a");
    sub->add_option("--b", c.b, "completeness/soundness threshold b");
    sub->add_option("--n", c.n, "number of qubits of the decoded state");
    sub->add_option("--blocks", c.blocks, "one-hot block count");
    sub->add_option("--block-size", c.block_size, "one-hot block size");
    sub->add_option("--bits", c.bits, "classical bitstring");
    sub->add_option("--lower-bound", c.lower_bound, "lower bound L on |q| for multiplicative mode");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (app.get_subcommands().front()->count("--seed")) {
    c.seed = seed;
  } else {
    c.seed = (std::uint64_t{std::random_device{}()} << 32) | std::random_device{}();
    err << "seed: " << *c.seed << '\n';
  }

  auto fail = [&](int code, const char* kind, const std::string& what) {
    err << c.command << ": " << what << '\n';
    Json report;
    report["config"] = echo(c);
    report["error"] = kind;
    report["message"] = what;
    out << (c.compact ? report.dump() : report.dump(2)) << '\n';
    return code;
  };
  try {
    const Outcome o = dispatch(c);
    emit(c, o.report, out);
    return o.exit_code;
  } catch (const InvalidInput& e) {
    return fail(kUsage, "invalid-input", e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(kUsage, "invalid-input", e.what());
  } catch (const ConvergenceError& e) {
    return fail(kResource, "convergence", e.what());
  } catch (const ResourceError& e) {
    return fail(kResource, "resource", e.what());
  }
}

}  // namespace paraqt::cli
