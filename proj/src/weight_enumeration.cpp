#include <paraqt/errors.hpp>
#include <paraqt/weight_enumeration.hpp>

#include <array>
#include <bit>
#include <string>

namespace paraqt {
namespace {

constexpr int kMaxBits = 62;

// Pascal's triangle up to row 62; every entry fits in 64 bits.
struct BinomialTable {
  std::array<std::array<std::uint64_t, kMaxBits + 1>, kMaxBits + 1> c{};
  constexpr BinomialTable() {
    for (int n = 0; n <= kMaxBits; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

constexpr BinomialTable kBinomials{};

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > kMaxBits) throw ResourceError("binomial table limited to n <= 62");
  return kBinomials.c[n][k];
}

int index_bits(std::uint64_t count) {
  if (count == 0) throw InvalidInput("index_bits of an empty set");
  return count == 1 ? 0 : static_cast<int>(std::bit_width(count - 1));
}

int hamming_weight(std::uint64_t bits) { return std::popcount(bits); }

std::uint64_t next_same_weight(std::uint64_t bits) {
  const std::uint64_t lowest = bits & (~bits + 1);
  const std::uint64_t ripple = bits + lowest;
  return ripple | (((bits ^ ripple) >> 2) / lowest);
}

WeightEnumeration::WeightEnumeration(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > kMaxBits) throw ResourceError("weight enumeration supports 0 <= n <= 62");
  if (k < 0 || k > n) throw InvalidInput("weight k must satisfy 0 <= k <= n");
  dim_ = binomial(n, k);
}

// Set bits at ascending positions p_1 < ... < p_k (position 0 = least
// significant) rank to sum_j C(p_j, j): the combinatorial number system,
// which orders equal-weight integers numerically.
std::uint64_t WeightEnumeration::rank(std::uint64_t bits) const {
  if (n_ < 64 && (bits >> n_) != 0) throw InvalidInput("bitstring longer than n");
  if (hamming_weight(bits) != k_) {
    throw InvalidInput("bitstring has weight " + std::to_string(hamming_weight(bits)) + ", expected " +
                       std::to_string(k_));
  }
  std::uint64_t r = 0;
  int j = 1;
  while (bits != 0) {
    const int pos = std::countr_zero(bits);
    r += binomial(pos, j++);
    bits &= bits - 1;
  }
  return r;
}

std::uint64_t WeightEnumeration::unrank(std::uint64_t index) const {
  if (index >= dim_) {
    throw InvalidInput("rank " + std::to_string(index) + " out of range [0, " + std::to_string(dim_) + ")");
  }
  std::uint64_t bits = 0;
  int pos = n_ - 1;
  for (int j = k_; j >= 1; --j) {
    while (binomial(pos, j) > index) --pos;
    index -= binomial(pos, j);
    bits |= std::uint64_t{1} << pos;
    --pos;
  }
  return bits;
}

std::uint64_t WeightEnumeration::rank(std::string_view bitstring) const {
  if (static_cast<int>(bitstring.size()) != n_) {
    throw InvalidInput("bitstring length " + std::to_string(bitstring.size()) + " != n = " + std::to_string(n_));
  }
  return rank(parse_bitstring(bitstring));
}

std::string WeightEnumeration::unrank_string(std::uint64_t index) const {
  return format_bitstring(unrank(index), n_);
}

std::vector<std::uint64_t> WeightEnumeration::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(dim_);
  if (k_ == 0) {
    out.push_back(0);
    return out;
  }
  std::uint64_t bits = (std::uint64_t{1} << k_) - 1;
  for (std::uint64_t i = 0; i < dim_; ++i) {
    out.push_back(bits);
    if (i + 1 < dim_) bits = next_same_weight(bits);
  }
  return out;
}

std::uint64_t parse_bitstring(std::string_view bitstring) {
  if (bitstring.size() > 64) throw InvalidInput("bitstring longer than 64 characters");
  std::uint64_t bits = 0;
  for (char ch : bitstring) {
    if (ch != '0' && ch != '1') throw InvalidInput(std::string("bitstring contains '") + ch + "'");
    bits = (bits << 1) | static_cast<std::uint64_t>(ch - '0');
  }
  return bits;
}

std::string format_bitstring(std::uint64_t bits, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((bits >> (width - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::uint64_t rank_weight_string(int n, int k, std::string_view bitstring) {
  return WeightEnumeration(n, k).rank(bitstring);
}

std::string unrank_weight_string(int n, int k, std::uint64_t index) {
  return WeightEnumeration(n, k).unrank_string(index);
}

}  // namespace paraqt
