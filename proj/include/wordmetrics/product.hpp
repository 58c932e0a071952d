#ifndef WORDMETRICS_PRODUCT_HPP_
#define WORDMETRICS_PRODUCT_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wordmetrics/group.hpp"
#include "wordmetrics/report.hpp"
#include "wordmetrics/subset_algebra.hpp"

namespace wordmetrics {

/// G = H x| K with H a subgroup and K a normal subgroup of G, stored as
/// subsets of G.  p and q are the projections onto the factors of the
/// unique factorization g = p(g) q(g).
struct SemidirectContext {
  GroupPtr group;
  Subset h;
  Subset k;
  std::vector<Elem> p;
  std::vector<Elem> q;

  std::pair<Elem, Elem> split(Elem g) const { return {p[g], q[g]}; }
  /// p(T)
  Subset project(const Subset& t) const;
};

/// Verifies that K is normal, H is a subgroup, H n K = {e} and HK = G.
/// Throws GroupAxiomError naming the failure.
SemidirectContext make_semidirect_context(GroupPtr g, const Subset& h, const Subset& k);

/// The context of semidirect_product(h, k, action), with H and K embedded
/// as {(x, e)} and {(e, y)}.
SemidirectContext semidirect_context(const GroupPtr& h, const GroupPtr& k,
                                     const std::vector<std::vector<Elem>>& action);

/// A pair (a, b) with a in H, b in K and ab != ba, if any.
std::optional<std::pair<Elem, Elem>> noncommuting_witness(const SemidirectContext& ctx);

/// phi(T) = (p(T), T n K)
std::pair<Subset, Subset> phi(const SemidirectContext& ctx, const Subset& t);

/// psi_L(S, U) = S^L u U, or psi'_L(S, U) = S^L U when `primed`.  Throws
/// std::domain_error unless S in S''(H)^*, U in S''(K)^* and L in S''(K).
Subset psi(const SemidirectContext& ctx, const Subset& s, const Subset& u, const Subset& l,
           bool primed);

/// phi psi = phi psi' = id, nu_hat_H(psi, psi') <= 2, and the elementary
/// containments and traces of S^L, S^L u U, S^L U, including S^K U = U S^K.
Report psi_identities(const SemidirectContext& ctx, const std::vector<Subset>& family_s,
                      const std::vector<Subset>& family_u, const std::vector<Subset>& family_l);

/// For psi: mu = max(nu_H^H(S,S'), nu_H^G(T,U')) exactly with T = S^L u U.
/// For psi': max <= mu' <= 2 max with T = S^L U.  Exhaustive over all pairs
/// of (S,U) in family_s x family_u when `samples` is 0, otherwise that many
/// random pairs of pairs.
Report sdprod_metric_compare(const SemidirectContext& ctx, const Subset& l,
                             const std::vector<Subset>& family_s,
                             const std::vector<Subset>& family_u, std::size_t samples = 0,
                             std::uint64_t seed = 0);

/// For G = H x K: mu = mu' = max(nu_H^H(S,S'), nu_H^K(U,U')), plus
/// T' in T^n <=> (S' in S^n and U' in U^n) for n up to |G|.  Throws
/// std::invalid_argument with a noncommuting pair when G is not direct.
Report direct_product_collapse(const SemidirectContext& ctx, const std::vector<Subset>& family_s,
                               const std::vector<Subset>& family_u, std::size_t samples = 0,
                               std::uint64_t seed = 0);

/// For G = H x K: SU = US, (SU)^n = S^n U^n, (S u U)^n contains S^n u U^n,
/// S^G = S^H, U^G = U^K, (SU)^G = S^H U^K and q(S u U) = q(SU) = U.
Report direct_product_identities(const SemidirectContext& ctx,
                                 const std::vector<Subset>& family_s,
                                 const std::vector<Subset>& family_u,
                                 std::uint64_t max_power = 3);

/// psi (and psi' where it applies) maps inputs satisfying P to outputs
/// satisfying P.  Conditions on S are read in H and on U in K.  Cases whose
/// side conditions (L = K, U conjugation-invariant in G, L finite) are not
/// met are counted as skipped with the reason.
Report condition_preservation(const SemidirectContext& ctx, Condition p, const Subset& l,
                              const std::vector<Subset>& family_s,
                              const std::vector<Subset>& family_u);

/// For every X in S''(G) (|G| <= 16): X in Im psi iff X = (X n H)^L u (X n K)
/// with both parts starred, and likewise for psi' with (X n H)^L (X n K).
Report image_characterization(const SemidirectContext& ctx, const Subset& l);

}  // namespace wordmetrics

#endif  // WORDMETRICS_PRODUCT_HPP_
