#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tcd {

// Deterministic seeded RNG. mt19937_64's output sequence is pinned by the
// standard, and all bounded draws below avoid std::uniform_int_distribution
// (whose mapping is implementation-defined), so identical (config, seed)
// pairs produce identical artifacts on any platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n) by rejection; n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  // Bernoulli(p) for p in [0,1] via a 53-bit draw.
  bool bernoulli(double p) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return u < p;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  // Independent child stream; label keeps sibling streams decorrelated.
  SeededRng child(std::uint64_t label) {
    return SeededRng(mix(mix(eng_(), label), 0x9e3779b97f4a7c15ull));
  }

 private:
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ull + (b << 1 | 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::mt19937_64 eng_;
};

}  // namespace tcd
