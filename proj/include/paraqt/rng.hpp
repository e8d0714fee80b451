#pragma once

#include <array>
#include <cstdint>

namespace paraqt {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Draw `index`
/// of stream `stream` under key `seed` is a pure function of the triple, so
/// samples can be produced in any order by any number of workers.
class Philox {
 public:
  using Block = std::array<std::uint32_t, 4>;

  static constexpr Block generate(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    Block ctr{static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
              static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::uint32_t k0 = static_cast<std::uint32_t>(seed);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t{kM0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kM1} * ctr[2];
      ctr = Block{static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ k0, static_cast<std::uint32_t>(p1),
                  static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ k1, static_cast<std::uint32_t>(p0)};
      k0 += kW0;
      k1 += kW1;
    }
    return ctr;
  }

  static constexpr std::uint64_t bits64(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    const Block b = generate(seed, stream, index);
    return (std::uint64_t{b[0]} << 32) | b[1];
  }

  /// Uniform double in [0, 1) with 53 random bits.
  static constexpr double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return static_cast<double>(bits64(seed, stream, index) >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint32_t kM0 = 0xD2511F53u;
  static constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kW0 = 0x9E3779B9u;
  static constexpr std::uint32_t kW1 = 0xBB67AE85u;
};

}  // namespace paraqt
