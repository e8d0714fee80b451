#include <paraqt/cli.hpp>
#include <paraqt/errors.hpp>
#include <paraqt/jones.hpp>

#include <doctest.h>

#include <sstream>

using namespace paraqt;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "paraqt");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(PARAQT_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("ham-decide on the sum of Z fixture") {
  const Result r = run({"ham-decide", "--input", fixture("sum_z4.json"), "--k", "1", "--seed", "1", "--json"});
  CHECK(r.code == 0);
  const auto j = io::Json::parse(r.out);
  CHECK(j["lambda_min"].get<double>() == doctest::Approx(2.0));
  CHECK(j["verdict"] == "YES");
  CHECK(j["config"]["seed"] == 1);
  const Result no = run({"ham-decide", "--input", fixture("sum_z4.json"), "--k", "1", "--a", "0.5", "--b", "1.5", "--seed", "1"});
  CHECK(no.code == 1);
  const Result pv = run({"ham-decide", "--input", fixture("sum_z4.json"), "--k", "1", "--a", "1.5", "--b", "2.5", "--seed", "1"});
  CHECK(pv.code == 2);
}

TEST_CASE("usage and parse errors exit with 3") {
  const Result bad = run({"ham-min", "--input", fixture("malformed.json"), "--k", "1", "--seed", "1"});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("parse error") != std::string::npos);
  CHECK(run({"ham-min", "--input", "/nonexistent.json", "--k", "1", "--seed", "1"}).code == 3);
  CHECK(run({"no-such-command"}).code == 3);
  CHECK(run({"weft", "--k", "abc"}).code == 3);
  CHECK(run({"jones", "--input", fixture("unlink4.json"), "--k", "6", "--seed", "1"}).code == 3);
}

TEST_CASE("resource errors exit with 4") {
  CHECK(run({"jones-exact", "--input", fixture("long_braid.json"), "--k", "5", "--seed", "1"}).code == 4);
}

TEST_CASE("missing seed is drawn and reported") {
  const Result r = run({"gapp-estimate", "--input", fixture("parity4.json"), "--json"});
  CHECK(r.code == 0);
  CHECK(r.err.rfind("seed: ", 0) == 0);
  const auto j = io::Json::parse(r.out);
  CHECK(j["seed"] == j["config"]["seed"]);
  CHECK(std::to_string(j["seed"].get<std::uint64_t>()) == r.err.substr(6, r.err.size() - 7));
}

TEST_CASE("jones on the 4-strand identity braid") {
  const Result r = run({"jones", "--input", fixture("unlink4.json"), "--k", "5", "--seed", "9", "--json"});
  CHECK(r.code == 0);
  const auto j = io::Json::parse(r.out);
  const Complex v{j["jones"][0].get<double>(), j["jones"][1].get<double>()};
  CHECK(std::abs(v - jones_exact({4, {}}, 5)) <= j["bound"].get<double>());
  CHECK(j["k"] == 5);
  CHECK(j["writhe"] == 0);
}

TEST_CASE("every command runs on its fixture") {
  const std::vector<std::vector<std::string>> cmds{
      {"ham-min", "--input", fixture("sum_z4.json"), "--k", "2", "--mode", "iterative"},
      {"amp-estimate", "--input", fixture("x_gate.json")},
      {"gapp-exact", "--input", fixture("parity4.json")},
      {"qmak-decide", "--input", fixture("copy_qubit0.json"), "--mode", "sampled"},
      {"weft", "--input", fixture("toffoli_chain.json")},
      {"encode-witness", "--input", fixture("weight2_state.json"), "--k", "2"},
      {"decode-witness", "--input", fixture("compressed3.json"), "--k", "2", "--n", "4"},
      {"onehot-decode", "--blocks", "2", "--block-size", "4", "--bits", "01000001"},
      {"wqcs-decide", "--input", fixture("copy_qubit0.json"), "--k", "1", "--a", "0.1", "--b", "0.9"},
      {"hwqcs-decide", "--input", fixture("copy_qubit0.json"), "--k", "1", "--a", "0.1", "--b", "0.9"},
      {"jones-exact", "--input", fixture("trefoil.json"), "--k", "5"},
  };
  for (auto args : cmds) {
    args.insert(args.end(), {"--seed", "3"});
    const Result r = run(args);
    INFO(args[0], " ", r.out, r.err);
    CHECK(r.code == 0);
    CHECK_NOTHROW(io::Json::parse(r.out));
  }
  const Result reject = run({"onehot-decode", "--blocks", "1", "--block-size", "4", "--bits", "0011", "--seed", "1"});
  CHECK(reject.code == 1);
  CHECK(io::Json::parse(reject.out)["decoded"] == "REJECT");
}
