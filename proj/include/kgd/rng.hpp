#ifndef KGD_RNG_HPP
#define KGD_RNG_HPP

#include <cstdint>

namespace kgd {

/// Counter-based splittable generator: stream k of seed s is an independent
/// deterministic sequence, so restart k produces identical samples no matter
/// how restarts are distributed over threads.
///
/// Core transform is the splitmix64 finalizer.
class SplitRng {
 public:
  SplitRng(std::uint64_t seed, std::uint64_t stream)
      : state_(mix(seed ^ (0x9e3779b97f4a7c15ull * (stream + 1)))) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  /// Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (cached second value not kept; one
  /// transform per call keeps the stream layout trivially reproducible).
  double next_gaussian();

  int next_sign() { return (next_u64() & 1ull) ? 1 : -1; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }
  std::uint64_t state_;
};

}  // namespace kgd

#endif  // KGD_RNG_HPP
