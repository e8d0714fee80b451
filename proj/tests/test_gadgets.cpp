#include "oracles.hpp"

#include <paraqt/errors.hpp>
#include <paraqt/gadgets.hpp>
#include <paraqt/weight_enumeration.hpp>

#include <doctest.h>

using namespace paraqt;

namespace {

StateVector random_weight_state(int n, int k, std::mt19937_64& rng) {
  const auto idx = oracle::weight_indices(n, k);
  const ComplexVector small = oracle::random_state(static_cast<int>(idx.size()), rng);
  ComplexVector v = ComplexVector::Zero(1 << n);
  for (std::size_t i = 0; i < idx.size(); ++i) v[static_cast<Eigen::Index>(idx[i])] = small[static_cast<Eigen::Index>(i)];
  return StateVector(n, v);
}

}  // namespace

TEST_CASE("weight projection") {
  const auto same = project_weight_k(StateVector::basis(4, 0b0101), 2);
  CHECK(same.probability == doctest::Approx(1.0));
  CHECK_FALSE(same.zero);
  CHECK(same.state[0b0101] == Complex(1.0));
  const auto off = project_weight_k(StateVector::basis(4, 0b0111), 2);
  CHECK(off.zero);
  CHECK(off.probability == 0.0);
  CHECK(off.state.norm() == 0.0);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const StateVector s(5, oracle::random_state(32, rng));
    double ref = 0.0;
    for (std::uint64_t x : oracle::weight_indices(5, 2)) ref += std::norm(s[x]);
    const auto p = project_weight_k(s, 2);
    CHECK(std::abs(p.probability - ref) < 1e-12);
    const auto twice = project_weight_k(p.state, 2);
    CHECK((twice.state.amplitudes() - p.state.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("witness encoding") {
  const StateVector e = encode_weight_witness(4, 2, StateVector::basis(4, 0b0011));
  CHECK(e.num_qubits() == 3);
  CHECK(e[0] == Complex(1.0));
  CHECK(decode_weight_witness(4, 2, StateVector(3))[0b0011] == Complex(1.0));

  ComplexVector uniform = ComplexVector::Zero(16);
  for (std::uint64_t x : oracle::weight_indices(4, 2)) uniform[static_cast<Eigen::Index>(x)] = 1.0 / std::sqrt(6.0);
  const StateVector u = encode_weight_witness(4, 2, StateVector(4, uniform));
  for (std::uint64_t r = 0; r < 8; ++r) CHECK(std::abs(u[r] - (r < 6 ? 1.0 / std::sqrt(6.0) : 0.0)) < 1e-15);
  CHECK((decode_weight_witness(4, 2, u).amplitudes() - uniform).norm() < 1e-15);

  CHECK_THROWS_AS(encode_weight_witness(4, 2, StateVector::basis(4, 0b0111)), InvalidInput);
  CHECK_THROWS_AS(decode_weight_witness(4, 2, StateVector::basis(3, 7)), InvalidInput);
  CHECK_THROWS_AS(decode_weight_witness(4, 2, StateVector(2)), InvalidInput);
}

TEST_CASE("encoded amplitudes follow the rank table") {
  std::mt19937_64 rng(2);
  const StateVector s = random_weight_state(7, 3, rng);
  const StateVector e = encode_weight_witness(7, 3, s);
  const auto idx = oracle::weight_indices(7, 3);
  for (std::size_t r = 0; r < idx.size(); ++r) REQUIRE(e[r] == s[idx[r]]);
}

TEST_CASE("encode and decode are inverse isometries") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + t % 9;
    const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(n, 4) + 1));
    const StateVector a = random_weight_state(n, k, rng);
    const StateVector b = random_weight_state(n, k, rng);
    const StateVector ea = encode_weight_witness(n, k, a);
    const StateVector eb = encode_weight_witness(n, k, b);
    CHECK(ea.num_qubits() == index_bits(binomial(n, k)));
    CHECK(std::abs(inner_product(ea, eb) - inner_product(a, b)) < 1e-10);
    CHECK((decode_weight_witness(n, k, ea).amplitudes() - a.amplitudes()).norm() < 1e-10);
  }
}

TEST_CASE("classical weight states") {
  const QuantumCircuit id(2, 0, 0, {});
  const StateVector z = prepare_classical_weight_state(4, 2, id, {2, 0, 3, 1});
  CHECK(z[0] == Complex(1.0));
  const QuantumCircuit x(1, 0, 0, {Gate::named(GateKind::kX, 0)});
  const StateVector s = prepare_classical_weight_state(4, 1, x, {3, 0, 1, 2});
  CHECK(std::abs(s[0b0001] - 1.0) < 1e-15);
  CHECK_THROWS_AS(prepare_classical_weight_state(4, 1, x, {0, 0, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(prepare_classical_weight_state(4, 1, x, {0, 1, 2}), InvalidInput);

  // Index-permutation oracle: amplitude of x lands on the index whose bit perm[j] equals bit j of x.
  std::mt19937_64 rng(4);
  const QuantumCircuit d = oracle::random_circuit(2, 0, 6, rng);
  std::vector<int> perm{0, 1, 2, 3, 4};
  std::shuffle(perm.begin(), perm.end(), rng);
  const StateVector got = prepare_classical_weight_state(5, 2, d, perm);
  const StateVector head = simulate(d, StateVector(2));
  for (std::uint64_t xidx = 0; xidx < 32; ++xidx) {
    std::uint64_t y = 0;
    for (int j = 0; j < 5; ++j) {
      if (oracle::bit_of(xidx, j, 5)) y |= std::uint64_t{1} << (4 - perm[static_cast<std::size_t>(j)]);
    }
    const Complex expect = (xidx & 0b111) ? Complex(0.0) : head[xidx >> 3];
    REQUIRE(std::abs(got[y] - expect) < 1e-14);
  }
}

TEST_CASE("one-hot block decoding") {
  CHECK(one_hot_block_decode(1, 4, "0100") == std::optional<std::string>("01"));
  CHECK_FALSE(one_hot_block_decode(1, 4, "0011").has_value());
  CHECK_FALSE(one_hot_block_decode(1, 4, "0000").has_value());
  CHECK(one_hot_block_decode(3, 8, "001000001000000000000001") == std::optional<std::string>("010000111"));
  CHECK(one_hot_block_decode(2, 1, "11") == std::optional<std::string>(""));
  CHECK_THROWS_AS(one_hot_block_decode(2, 4, "0100"), InvalidInput);
}

TEST_CASE("one-hot decoding is exhaustively correct for block sizes up to 8") {
  for (int size = 1; size <= 8; ++size) {
    const int width = index_bits(static_cast<std::uint64_t>(size));
    for (int blocks = 1; blocks <= 2; ++blocks) {
      const int len = size * blocks;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x) {
        const std::string bits = format_bitstring(x, len);
        std::string expect;
        bool ok = true;
        for (int b = 0; b < blocks && ok; ++b) {
          const std::string blk = bits.substr(static_cast<std::size_t>(b * size), static_cast<std::size_t>(size));
          ok = std::count(blk.begin(), blk.end(), '1') == 1;
          if (ok) expect += format_bitstring(blk.find('1'), width);
        }
        const auto got = one_hot_block_decode(blocks, size, bits);
        REQUIRE(got.has_value() == ok);
        if (ok) REQUIRE(*got == expect);
      }
    }
  }
}

TEST_CASE("Hadamard test") {
  const QuantumCircuit prep1 = identity_prep(1);
  CHECK(hadamard_zero_probability(hadamard_test_circuit(ComplexMatrix::Identity(2, 2), HadamardPart::kReal, prep1)) ==
        doctest::Approx(1.0));
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  CHECK(hadamard_zero_probability(hadamard_test_circuit(z, HadamardPart::kReal, prep1)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(hadamard_test_circuit(2.0 * z, HadamardPart::kReal, prep1), InvalidInput);
  CHECK_THROWS_AS(hadamard_test_circuit(ComplexMatrix::Identity(4, 4), HadamardPart::kReal, prep1), InvalidInput);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix u = oracle::random_unitary(8, rng);
    const QuantumCircuit prep = oracle::random_circuit(0, 3, 6, rng);
    const ComplexVector psi = oracle::circuit_dense(prep).col(0);
    const Complex q = psi.dot(u * psi);
    const double re = hadamard_zero_probability(hadamard_test_circuit(u, HadamardPart::kReal, prep));
    const double im = hadamard_zero_probability(hadamard_test_circuit(u, HadamardPart::kImag, prep));
    REQUIRE(std::abs(re - (1.0 + q.real()) / 2.0) < 1e-10);
    REQUIRE(std::abs(im - (1.0 + q.imag()) / 2.0) < 1e-10);
  }
}
