#include "wordmetrics/sampling.hpp"

#include <set>
#include <stdexcept>

namespace wordmetrics {

Subset Sampler::subset_of(const Subset& pool) {
  Subset out(pool.universe(), pool.size());
  pool.for_each([&](Elem x) {
    if (coin()) {
      out.insert(x);
    }
  });
  return out;
}

Subset Sampler::starred_double_prime(const FiniteGroup& g, const Subset& pool) {
  Subset rest = pool - g.identity_set();
  if (rest.empty()) {
    throw std::invalid_argument("pool has no non-identity element");
  }
  while (true) {
    Subset s = subset_of(rest);
    if (!s.empty()) {
      s.insert(g.identity());
      return s;
    }
  }
}

Subset Sampler::starred_prime(const FiniteGroup& g) {
  Subset s = starred_double_prime(g);
  s.erase(g.identity());
  return s;
}

std::vector<Subset> Sampler::starred_double_prime_pool(const FiniteGroup& g, std::size_t count) {
  const std::size_t n = g.order();
  if (n < 2) {
    return {};
  }
  // Family size is 2^(n-1) - 1.
  if (n - 1 < 63) {
    const std::uint64_t family = (std::uint64_t{1} << (n - 1)) - 1;
    if (count > family) {
      count = static_cast<std::size_t>(family);
    }
  }
  std::set<Subset> seen;
  std::vector<Subset> out;
  while (out.size() < count) {
    Subset s = starred_double_prime(g);
    if (seen.insert(s).second) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace wordmetrics
