#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace paraqt {

/// Binomial coefficient C(n, k); zero when k < 0 or k > n. Exact for n <= 62.
std::uint64_t binomial(int n, int k);

/// Ceil(log2(count)) with log2(1) = 0: qubits needed to index `count` items.
int index_bits(std::uint64_t count);

int hamming_weight(std::uint64_t bits);

/// Ranking bijection between S_{n,k} (n-bit strings of Hamming weight k) and
/// {0, ..., C(n,k)-1}. Ranks follow the numeric order of the strings read as
/// unsigned integers, computed with the combinatorial number system.
class WeightEnumeration {
 public:
  WeightEnumeration(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::uint64_t dim() const noexcept { return dim_; }

  std::uint64_t rank(std::uint64_t bits) const;
  std::uint64_t unrank(std::uint64_t index) const;

  /// Bitstring forms; character 0 is qubit 0 (the most significant bit).
  std::uint64_t rank(std::string_view bitstring) const;
  std::string unrank_string(std::uint64_t index) const;

  /// All members of S_{n,k} in rank order. Size must fit in memory.
  std::vector<std::uint64_t> members() const;

 private:
  int n_;
  int k_;
  std::uint64_t dim_;
};

/// Next integer with the same popcount (Gosper's hack); precondition bits != 0.
std::uint64_t next_same_weight(std::uint64_t bits);

std::uint64_t parse_bitstring(std::string_view bitstring);
std::string format_bitstring(std::uint64_t bits, int width);

std::uint64_t rank_weight_string(int n, int k, std::string_view bitstring);
std::string unrank_weight_string(int n, int k, std::uint64_t index);

}  // namespace paraqt
