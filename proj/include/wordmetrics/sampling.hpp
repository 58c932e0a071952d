#ifndef WORDMETRICS_SAMPLING_HPP_
#define WORDMETRICS_SAMPLING_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "wordmetrics/group.hpp"

namespace wordmetrics {

/// Deterministic sampler.  Uses std::mt19937_64 and plain modular
/// reduction so that draws are identical across standard libraries
/// (the std distributions are implementation-defined).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform-ish integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool coin() { return (rng_() & 1U) != 0; }

  /// Each element of `pool` independently with probability 1/2.
  Subset subset_of(const Subset& pool);

  /// A random member of S''(G)^* restricted to `pool` (which must contain e
  /// and another element): e plus a nonempty random part of pool - {e}.
  Subset starred_double_prime(const FiniteGroup& g, const Subset& pool);
  Subset starred_double_prime(const FiniteGroup& g) {
    return starred_double_prime(g, g.full_set());
  }
  /// A random member of S'(G)^*.
  Subset starred_prime(const FiniteGroup& g);

  /// `count` distinct random members of S''(G)^*; fewer if the family is
  /// smaller.
  std::vector<Subset> starred_double_prime_pool(const FiniteGroup& g, std::size_t count);

 private:
  std::mt19937_64 rng_;
};

}  // namespace wordmetrics

#endif  // WORDMETRICS_SAMPLING_HPP_
