#pragma once

#include <cstdint>

#include "plift/field.hpp"

namespace plift {

inline constexpr std::uint64_t kDefaultSeed = 0x9E3779B97F4A7C15ULL;

// xorshift64*: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; out = x * 0x2545F4914F6CDD1D.
// Field elements take the top 32 output bits modulo p. A zero seed is
// replaced by kDefaultSeed since zero is a fixed point.
class XorShift64Star {
 public:
  explicit XorShift64Star(std::uint64_t seed = kDefaultSeed) noexcept : state_(seed ? seed : kDefaultSeed) {}

  std::uint64_t next() noexcept {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  std::uint32_t below(std::uint32_t bound) noexcept { return static_cast<std::uint32_t>((next() >> 32) % bound); }

  FieldElem element(const PrimeField& f) noexcept { return {below(f.modulus())}; }

 private:
  std::uint64_t state_;
};

// SplitMix64 finalizer, used to derive independent per-instance seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace plift
