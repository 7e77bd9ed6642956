#pragma once

#include <array>
#include <cstdint>

namespace selector {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). A block is a
// pure function of (key, counter), so replicate streams are reproducible and
// independent of worker scheduling: stream index goes in the high counter
// lanes, the in-stream draw index in the low lanes.
struct Philox {
  static constexpr std::uint32_t M0 = 0xD2511F53u;
  static constexpr std::uint32_t M1 = 0xCD9E8D57u;
  static constexpr std::uint32_t W0 = 0x9E3779B9u;
  static constexpr std::uint32_t W1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::uint64_t key,
                                            std::array<std::uint32_t, 4> c) {
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
    for (int round = 0; round < 10; ++round) {
      std::uint64_t p0 = static_cast<std::uint64_t>(M0) * c[0];
      std::uint64_t p1 = static_cast<std::uint64_t>(M1) * c[2];
      std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
      k0 += W0;
      k1 += W1;
    }
    return c;
  }
};

// One replicate's stream: 64-bit words in deterministic order.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream) : key_(seed), stream_(stream) {}

  std::uint64_t next_u64() {
    if (pos_ == 0) {
      auto b = Philox::block(key_, {static_cast<std::uint32_t>(index_),
                                    static_cast<std::uint32_t>(index_ >> 32),
                                    static_cast<std::uint32_t>(stream_),
                                    static_cast<std::uint32_t>(stream_ >> 32)});
      buf_[0] = (static_cast<std::uint64_t>(b[1]) << 32) | b[0];
      buf_[1] = (static_cast<std::uint64_t>(b[3]) << 32) | b[2];
      ++index_;
    }
    std::uint64_t v = buf_[pos_];
    pos_ = (pos_ + 1) & 1;
    return v;
  }

  // 53-bit uniform in [0,1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
  std::uint64_t stream_;
  std::uint64_t index_ = 0;
  std::uint64_t buf_[2] = {0, 0};
  int pos_ = 0;
};

}  // namespace selector
