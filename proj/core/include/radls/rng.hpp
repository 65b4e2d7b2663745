#pragma once

#include <cstdint>

namespace radls {

// pcg32 (PCG XSH RR 64/32, O'Neill): 64-bit LCG state with an
// xorshift-rotate output permutation. A (seed, stream) pair selects a
// reproducible sequence; distinct stream ids give unrelated sequences for
// the same seed. Integer-only arithmetic, so draws are identical across
// platforms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(0), inc_((stream << 1u) | 1u) {
    next_u32();
    state_ += seed;
    next_u32();
  }

  std::uint32_t next_u32() {
    std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  // Uniform in [0, 1), 32-bit resolution.
  double uniform() { return static_cast<double>(next_u32()) * 0x1p-32; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

}  // namespace radls
