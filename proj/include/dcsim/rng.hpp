#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace dcsim {

/// Purposes for derived random streams. Each purpose draws from its own
/// stream so that, for example, changing the UE count leaves the pico
/// layout untouched.
enum class StreamPurpose : std::uint64_t {
  Deployment = 1,
  Drop = 2,
  Mobility = 3,
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for the stream (root, purpose, index).
std::uint64_t derive_seed(std::uint64_t root, StreamPurpose purpose, std::uint64_t index = 0);

/// 64-bit Mersenne Twister with platform-independent real draws (the
/// standard distributions are implementation-defined).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  std::uint64_t next_u64() { return engine_(); }
  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace dcsim
