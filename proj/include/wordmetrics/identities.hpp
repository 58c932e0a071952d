#ifndef WORDMETRICS_IDENTITIES_HPP_
#define WORDMETRICS_IDENTITIES_HPP_

#include <cstdint>
#include <vector>

#include "wordmetrics/group.hpp"
#include "wordmetrics/report.hpp"

namespace wordmetrics {

// The laws of the subset calculus (products, powers, inverses,
// conjugation, closures and generated subgroups) as executable checks.
// Every item name states the law it tests.  Implications whose hypothesis
// fails for the given sets are recorded as skips, and each such law is
// also run on derived sets that satisfy the hypothesis (a generated
// subgroup, a conjugation closure, a symmetrization).

/// Laws in one set S.  The conjugation laws run over a and b in
/// `conjugators`.  Exponents run over 0..3 and inf.
void check_unary_identities(const FiniteGroup& g, const Subset& s,
                            const std::vector<Elem>& conjugators, Report& out);

/// Laws in S, T, U and an element a.
void check_triple_identities(const FiniteGroup& g, const Subset& s, const Subset& t,
                             const Subset& u, Elem a, Report& out);

/// Element-level conjugation laws over all x, y, a, b, the laws with a
/// normal subgroup for every normal subgroup of G, and the empty-set
/// conventions.
void check_group_identities(const FiniteGroup& g, Report& out);

/// The full suite on G.
///   |G| <= 4:               all triples (S, T, U) and all pairs (a, b)
///   |G| <= exhaustive_limit: all S with all (a, b); all pairs (S, T) with
///                            U and a drawn from `seed`
///   larger:                 `samples` random triples (S, T, U, a, b)
Report subset_identity_suite(const FiniteGroup& g, std::size_t exhaustive_limit = 8,
                             std::size_t samples = 500, std::uint64_t seed = 0);

}  // namespace wordmetrics

#endif  // WORDMETRICS_IDENTITIES_HPP_
