#ifndef HARDY_RNG_HPP
#define HARDY_RNG_HPP

#include <cstdint>

#include "hardy/grid.hpp"

namespace hardy {

/// Deterministic random stream.  The generator is splitmix64, whose output
/// is fully specified, so results are reproducible across platforms and
/// standard libraries.  Substreams derived from (seed, index) are
/// statistically independent, which keeps parallel optimizer restarts
/// deterministic regardless of scheduling.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  cplx complex_normal() {
    const double re = normal();
    const double im = normal();
    return cplx(re, im);
  }

  static uint64_t derive(uint64_t seed, uint64_t index) {
    Rng r(seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
    return r.next_u64();
  }

  Rng substream(uint64_t index) const { return Rng(derive(state_, index)); }

 private:
  uint64_t state_;
};

}  // namespace hardy

#endif
