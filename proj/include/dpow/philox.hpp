#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace dpow {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123).
///
/// Stateless: the output block is a pure function of (counter, key), which
/// is what lets every vertex pair own an independent uniform that does not
/// depend on sampling order or thread schedule.
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Block generate(Block ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// One uniform in [0, 1) per unordered vertex pair, keyed by (seed, stream).
///
/// Stream 0 is what sample_gnp uses; Monte Carlo trial i uses stream i + 1.
class PairUniforms {
 public:
  PairUniforms(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  double operator()(int u, int v) const {
    if (u > v) std::swap(u, v);
    const Philox4x32::Block ctr{static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v),
                               static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
    const Philox4x32::Key key{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)};
    const auto out = Philox4x32::generate(ctr, key);
    const std::uint64_t bits = (std::uint64_t{out[0]} << 32 | out[1]) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

}  // namespace dpow
