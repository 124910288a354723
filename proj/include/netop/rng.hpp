// Seeded PRNG wrapper. All randomized law checks draw from this so that a
// report's seed reproduces the exact case stream.

#ifndef NETOP_RNG_HPP
#define NETOP_RNG_HPP

#include <cstdint>
#include <random>

namespace netop {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() { return eng_(); }

  // Uniform in [0, k). k must be positive.
  std::uint64_t below(std::uint64_t k) { return eng_() % k; }

  bool coin() { return (eng_() & 1u) != 0; }

  // Uniform in [lo, hi], inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace netop

#endif
