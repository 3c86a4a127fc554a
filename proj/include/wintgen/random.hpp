#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace wintgen {

// PCG-XSH-RR with 64-bit state and 32-bit output (O'Neill). Two 32-bit draws
// make one 64-bit value. All derived draws are defined here rather than via
// <random> distributions so that streams are identical across standard libraries.
class Pcg64 {
 public:
  using result_type = std::uint64_t;

  explicit Pcg64(std::uint64_t seed, std::uint64_t stream = 0x5851f42d4c957f2dULL) {
    inc_ = (stream << 1u) | 1u;
    next32();
    state_ += seed;
    next32();
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  std::uint32_t next32() {
    std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  result_type operator()() {
    std::uint64_t hi = next32();
    return (hi << 32u) | next32();
  }

  // Uniform integer in [lo, hi] by rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1u;
    if (span == 0) return static_cast<std::int64_t>((*this)());
    std::uint64_t limit = max() - max() % span;
    std::uint64_t r;
    do {
      r = (*this)();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  // Uniform double in [0, 1).
  double uniform01() { return static_cast<double>((*this)() >> 11u) * 0x1.0p-53; }

  double normal() {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_ = 0;
};

}  // namespace wintgen
