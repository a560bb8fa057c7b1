#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace wickchaos {

/// Philox4x32-10 counter-based generator.
///
/// The 64-bit key is the experiment seed and the upper half of the 128-bit
/// counter selects the substream, so trial t of seed s always sees the same
/// numbers regardless of which thread or in which order it runs.  Satisfies
/// UniformRandomBitGenerator, so it plugs into the <random> distributions.
class Philox4x32 {
 public:
  using result_type = std::uint32_t;

  explicit Philox4x32(std::uint64_t seed = 0, std::uint64_t stream = 0)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (index_ == 4) {
      block_ = generate(block_counter_++);
      index_ = 0;
    }
    return block_[index_++];
  }

  /// Skips ahead to the start of the given 4-word block.
  void seek(std::uint64_t block) {
    block_counter_ = block;
    index_ = 4;
  }

  std::uint64_t stream() const { return stream_; }

 private:
  std::array<std::uint32_t, 4> generate(std::uint64_t block) const {
    std::array<std::uint32_t, 4> c{static_cast<std::uint32_t>(block),
                                   static_cast<std::uint32_t>(block >> 32),
                                   static_cast<std::uint32_t>(stream_),
                                   static_cast<std::uint32_t>(stream_ >> 32)};
    std::array<std::uint32_t, 2> k = key_;
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * c[0];
      const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * c[2];
      c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
      k[0] += 0x9E3779B9u;
      k[1] += 0xBB67AE85u;
    }
    return c;
  }

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t block_counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int index_ = 4;
};

}  // namespace wickchaos
