#pragma once

#include <array>
#include <cstdint>

// Counter-based random numbers (Philox4x32-10, Salmon et al. 2011).
// Every draw is a pure function of (seed, four counter words), so streams
// can be evaluated in any order and from any thread with identical results.
// All randomness in the library goes through these keyed draws; nothing
// holds mutable generator state.

namespace grf::rng {

// Purpose tags keep unrelated streams disjoint even when the other key
// words collide.
enum class Tag : std::uint32_t {
  TrvBase = 1,      // shared per-group termination base uniforms
  Direction = 2,    // per-walker neighbor choices
  ErEdge = 3,       // Erdos-Renyi edge coin flips
  PowerStart = 4,   // power-iteration start vector
  KmeansInit = 5,   // k-means random assignments
  SplitShuffle = 6, // train/test split shuffles
  SeedDerive = 7,   // sub-seed derivation
};

namespace detail {

inline constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& ctr,
                         std::array<std::uint32_t, 2>& key) {
  const std::uint64_t p0 = std::uint64_t(kPhiloxM0) * ctr[0];
  const std::uint64_t p1 = std::uint64_t(kPhiloxM1) * ctr[2];
  const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
  const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  key[0] += kPhiloxW0;
  key[1] += kPhiloxW1;
}

} // namespace detail

// One 128-bit Philox block for counter (a,b,c,d) under the 64-bit seed.
inline std::array<std::uint32_t, 4> block(std::uint64_t seed, std::uint32_t a,
                                          std::uint32_t b, std::uint32_t c,
                                          std::uint32_t d) {
  std::array<std::uint32_t, 4> ctr{a, b, c, d};
  std::array<std::uint32_t, 2> key{std::uint32_t(seed),
                                   std::uint32_t(seed >> 32)};
  for (int round = 0; round < 10; ++round) detail::philox_round(ctr, key);
  return ctr;
}

inline std::uint64_t bits64(std::uint64_t seed, std::uint32_t a,
                            std::uint32_t b, std::uint32_t c, Tag tag) {
  const auto out = block(seed, a, b, c, static_cast<std::uint32_t>(tag));
  return (std::uint64_t(out[1]) << 32) | out[0];
}

// Uniform double in [0,1) with 53 random bits.
inline double uniform(std::uint64_t seed, std::uint32_t a, std::uint32_t b,
                      std::uint32_t c, Tag tag) {
  return double(bits64(seed, a, b, c, tag) >> 11) * 0x1.0p-53;
}

// Independent sub-seed for (label_a, label_b), e.g. per-repeat or
// per-ensemble streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint32_t label_a,
                                 std::uint32_t label_b = 0) {
  return bits64(seed, label_a, label_b, 0, Tag::SeedDerive);
}

} // namespace grf::rng
