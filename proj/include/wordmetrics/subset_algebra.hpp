#ifndef WORDMETRICS_SUBSET_ALGEBRA_HPP_
#define WORDMETRICS_SUBSET_ALGEBRA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wordmetrics/ext_nat.hpp"
#include "wordmetrics/group.hpp"

namespace wordmetrics {

/// ST = {xy | x in S, y in T}
Subset product(const FiniteGroup& g, const Subset& s, const Subset& t);

/// S^n, with S^0 = {e} for every S (including the empty set) and S^inf the
/// submonoid generated by S.
Subset power(const FiniteGroup& g, const Subset& s, ExtNat n);

/// S^{<=n} = S^0 u ... u S^n; for n = inf the same as power(s, inf).
Subset power_leq(const FiniteGroup& g, const Subset& s, ExtNat n);

Subset inverse_set(const FiniteGroup& g, const Subset& s);
/// S^± = S u S^{-1}
Subset symmetrize(const FiniteGroup& g, const Subset& s);

/// S^A = {a^{-1} x a | x in S, a in A}
Subset conjugate(const FiniteGroup& g, const Subset& s, const Subset& a);
/// S^a for a single element.
Subset conjugate_by(const FiniteGroup& g, const Subset& s, Elem a);

/// C(S) = S^G
Subset conj_closure(const FiniteGroup& g, const Subset& s);
/// C_S = (S^±)^G
Subset sym_conj_closure(const FiniteGroup& g, const Subset& s);

enum class GenMode { submonoid, subgroup, normal };

/// Submonoid S^inf, subgroup (S^±)^inf, or normal closure (C_S)^inf.
Subset generated(const FiniteGroup& g, const Subset& s, GenMode mode);

bool is_symmetric(const FiniteGroup& g, const Subset& s);
/// S^a = S for all a in `ambient` (all of G by default).
bool is_conj_invariant(const FiniteGroup& g, const Subset& s);
bool is_conj_invariant(const FiniteGroup& g, const Subset& s, const Subset& ambient);

enum class Condition { f, g, s, c, fc, fg, ng, nfg };

const std::vector<Condition>& all_conditions();
std::string to_string(Condition p);
Condition parse_condition(const std::string& text);

/// Decides condition P for S.  `ambient` selects the group in which the
/// condition is read: S^inf = ambient for g, conjugation by ambient for c.
/// It must be a subgroup containing S; by default the whole group.  On a
/// finite carrier f always holds and fc coincides with c (take A = S).
bool classify(const FiniteGroup& g, const Subset& s, Condition p);
bool classify(const FiniteGroup& g, const Subset& s, Condition p, const Subset& ambient);

/// Membership in S'(G) / S''(G), the starred family, and the canonical
/// representative S u {e} of the class [S] = {S, S u {e}}.
struct StarClass {
  bool contains_identity = false;  // S in S''(G)
  bool starred = false;            // S not in {∅, {e}}
  Subset canonical;
};
StarClass star_class(const FiniteGroup& g, const Subset& s);

/// The family S''(G)^* = subsets containing e other than {e}, in mask order.
/// Requires order <= 24.
std::vector<Subset> starred_double_prime_family(const FiniteGroup& g);
/// S''(P)^* for a pool P containing e: subsets of P containing e other than
/// {e}, ordered by the bitmask over P - {e}.
std::vector<Subset> starred_double_prime_family(const FiniteGroup& g, const Subset& pool);
/// The family S'(G)^* = nonempty subsets of G - {e}, in mask order.
std::vector<Subset> starred_prime_family(const FiniteGroup& g);

}  // namespace wordmetrics

#endif  // WORDMETRICS_SUBSET_ALGEBRA_HPP_
