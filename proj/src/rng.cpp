#include "dcsim/rng.hpp"

namespace dcsim {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, StreamPurpose purpose, std::uint64_t index) {
  std::uint64_t s = splitmix64(root);
  s = splitmix64(s ^ static_cast<std::uint64_t>(purpose));
  return splitmix64(s ^ index);
}

std::uint64_t RngStream::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v = engine_();
  while (v >= limit) v = engine_();
  return v % bound;
}

}  // namespace dcsim
