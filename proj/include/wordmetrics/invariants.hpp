#ifndef WORDMETRICS_INVARIANTS_HPP_
#define WORDMETRICS_INVARIANTS_HPP_

#include <cstdint>
#include <vector>

#include "wordmetrics/ext_nat.hpp"
#include "wordmetrics/group.hpp"
#include "wordmetrics/report.hpp"
#include "wordmetrics/subset_algebra.hpp"

namespace wordmetrics {

// All functions accept an optional `ambient` subgroup H of G: they then
// compute the invariant of H itself (conjugation by H, generation of H).
// By default the ambient is the whole group.

/// The sets C u C^{-1} for the ambient-conjugacy classes C other than {e},
/// deduplicated and ordered by smallest element.  Every symmetric,
/// conjugation-invariant subset of the ambient is a union of these, with or
/// without e.
std::vector<Subset> symmetric_class_orbits(const FiniteGroup& g, const Subset& ambient);

/// All S in S''_nfg(H)^*, i.e. canonical representatives containing e that
/// are symmetric, H-conjugation-invariant and generate H.  Built from the
/// class lattice; ordered by the bitmask of chosen orbits.  Throws if there
/// are more than `max_orbits` orbits.
std::vector<Subset> nfg_family(const FiniteGroup& g, const Subset& ambient,
                               std::size_t max_orbits = 20);
std::vector<Subset> nfg_family(const FiniteGroup& g);

struct RankResult {
  ExtNat value;               // inf when exceeds_cap
  std::vector<Elem> witness;  // an A of minimal size
  bool exceeds_cap = false;
};
/// rank_n = min |A| with <<A>> = H, searching |A| <= cap over conjugacy
/// class representatives.
RankResult rank_n(const FiniteGroup& g, const Subset& ambient, std::size_t cap);
RankResult rank_n(const FiniteGroup& g, std::size_t cap = 4);

/// nu_H(S, H)
ExtNat diam_for(const FiniteGroup& g, const Subset& s, const Subset& ambient);
ExtNat diam_for(const FiniteGroup& g, const Subset& s);

struct ExtremeResult {
  ExtNat value;
  Subset witness;            // a minimizer (diam) or maximizer (Delta)
  std::size_t candidates = 0;
  bool exact = true;         // false: Delta is a sampled lower bound
};

/// diam_nfg = min{nu_H(S, H) | S in S_nfg(H)}, found by enumeration (0 for
/// the trivial group, witnessed by {e}).
ExtremeResult diam_nfg(const FiniteGroup& g, const Subset& ambient);
ExtremeResult diam_nfg(const FiniteGroup& g);

/// Delta = sup{nu_H(S, H) | S in S_nfg(H)}.  Exhaustive when the class
/// lattice has at most `max_orbits` orbits; otherwise `samples` random
/// orbit unions are tried and the result is flagged as a lower bound.
ExtremeResult delta(const FiniteGroup& g, const Subset& ambient, std::size_t max_orbits = 20,
                    std::size_t samples = 4096, std::uint64_t seed = 0);
ExtremeResult delta(const FiniteGroup& g);

/// Canonical S'' representatives of every S satisfying P.  Brute force over
/// subsets for |G| <= max_order; nfg, ng and (s + c) families use the class
/// lattice for any order.  Throws std::length_error otherwise.
std::vector<Subset> enumerate_family(const FiniteGroup& g, Condition p,
                                     std::size_t max_order = 12);

/// For all S, T in the given nfg family: nu_H(S, T) < inf and
/// nu_H(T, G) <= nu_H(T, S) nu_H(S, G).
Report verify_nfg_family(const FiniteGroup& g, const std::vector<Subset>& family);

}  // namespace wordmetrics

#endif  // WORDMETRICS_INVARIANTS_HPP_
