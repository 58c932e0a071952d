#ifndef WORDMETRICS_TRANSPORT_HPP_
#define WORDMETRICS_TRANSPORT_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wordmetrics/ext_nat.hpp"
#include "wordmetrics/group.hpp"
#include "wordmetrics/report.hpp"

namespace wordmetrics {

// Transport of subsets along a group epimorphism f : G -> H with kernel K.

/// f(S)
Subset pushforward(const GroupHom& f, const Subset& s);
/// f^{-1}(S)
Subset pullback(const GroupHom& f, const Subset& s);

/// Compatibility identities of images and preimages on a sample of subsets
/// of G (for images) and of H (for preimages), powers up to `max_power`.
Report transport_identities(const GroupHom& f, const std::vector<Subset>& sample_g,
                            const std::vector<Subset>& sample_h, std::uint64_t max_power = 3);

/// nu_H(f(S), f(T)) <= nu_H(S, T) for pairs from `sample` in S(G)^* - S(K),
/// plus the pointwise bound nu_{f(S)}(f(x)) <= nu_S(x).  Pairs outside that
/// domain are counted as skipped.
Report verify_pushforward_lipschitz(const GroupHom& f, const std::vector<Subset>& sample);

/// Over `sample_h`: f(f^{-1}(S)) = S, the Hausdorff identity
/// (d_{f^{-1}S})_H(f^{-1}A, f^{-1}B) = (d_S)_H(A, B) on consecutive triples,
/// and nu_H(f^{-1}S, f^{-1}T) = nu_H(S, T) for S in S''(H)^*, T in S(H)^*.
/// The last identity fails when e is not in S (Z6 -> Z3, S = {1},
/// T = {0,1} gives 3 against 1), so such pairs are skipped.  Requires f
/// surjective.
Report verify_pullback_isometry(const GroupHom& f, const std::vector<Subset>& sample_h);

struct RetractionDefect {
  ExtNat defect;       // nu_hat_H(T, f^{-1} f(T))
  ExtNat bound;        // nu_H(T, K) + 1
  ExtNat back;         // nu_H(f^{-1} f(T), T), expected 1
  Subset saturation;   // f^{-1} f(T)
  bool saturation_ok;  // T in f^{-1}f(T) = TK
  bool ok() const { return defect <= bound && back == ExtNat(1) && saturation_ok; }
};

/// Throws std::domain_error unless T is in S''(G)^* - S(K).
RetractionDefect retraction_defect(const GroupHom& f, const Subset& t);

/// retraction_defect on every T of `family` inside S''(G)^* - S(K); others
/// are skipped.  With `m` set, also checks nu_hat_H(T, f^*f_*T) <= m + 1
/// on the members satisfying Q_m (K in T^{<=m}).
Report retraction_defect_check(const GroupHom& f, const std::vector<Subset>& family,
                               std::optional<std::uint64_t> m = std::nullopt);

/// The least m with K = U^{<=m} for every U in S_g(K).  Enumerates subsets of
/// K, so |K| must be at most 20.
std::uint64_t uniform_kernel_exponent(const GroupHom& f);

/// With m = uniform_kernel_exponent(f): every T in `family` with T n K
/// generating K satisfies Q_m, and nu_hat_H(T, f^*f_*T) <= m + 1.
Report kernel_generating_check(const GroupHom& f, const std::vector<Subset>& family);

enum class LiftRule { min_index, via_section };

/// A lift R of S in H: one chosen preimage R_x per x in S.
struct Lift {
  GroupHom hom;
  Subset target_set;
  std::vector<Elem> choice;  // indexed by H elements; meaningful on target_set
  Elem at(Elem x) const;     // R_x; throws if x is not in the target set
  Subset as_subset() const;  // R
};

/// min_index: R_e = e when e in S, otherwise the smallest preimage.
/// via_section: R_x = g(x) for the supplied section.
Lift make_lift(const GroupHom& f, const Subset& s, LiftRule rule = LiftRule::min_index,
               const Section* section = nullptr);

/// h(x) = (R_{f(x)})^{-1} x, an element of K.  Requires f(x) in S.
Elem h_map(const Lift& lift, Elem x);

/// x = R_{f(x)} h(x), h(xa) = h(x)a for a in K, and, when R_e = e,
/// h|_K = id and h^{-1}(e) = R.
Report lift_identities(const Lift& lift);

/// Pairs (u, v) with u in H and v in K (as an element of G).
using PairSet = std::set<std::pair<Elem, Elem>>;

/// chi(T) = {(f(x), h_S(x)) | x in T} with S = f(T) and the min-index lift.
PairSet chi(const GroupHom& f, const Subset& t);
/// omega(W) = {theta(p(W))_u v | (u, v) in W}.
Subset omega(const GroupHom& f, const PairSet& w);

/// omega chi = id on subsets of G and chi omega = id on subsets of H x K;
/// exhaustive when |G| <= exhaustive_limit, otherwise `samples` of each.
Report chi_omega_roundtrip(const GroupHom& f, std::size_t exhaustive_limit = 12,
                           std::size_t samples = 500, std::uint64_t seed = 0);

/// f(R^L u U) = f(R^L U) = S and (R^L u U) n K = (R^L U) n K = U for
/// random S in S''(H), lifts R with R_e = e, and L, U in S''(K).
Report theta_fact_check(const GroupHom& f, std::size_t samples = 500, std::uint64_t seed = 0);

/// B in S''_{f,s}(K), K-conjugation-invariant, with K = (B^K)^{<=m0} and
/// m0 = diam_nfg(K).
struct KernelWitness {
  Subset kernel;
  Subset b;
  std::uint64_t m0 = 0;
};
KernelWitness kernel_witness(const GroupHom& f);

/// eta(S) = C_{theta(A)} u U with A = S, theta the min-index lift and
/// U = C_B in G.  Throws std::domain_error if S is not in S''_nfg(H)^* and
/// std::invalid_argument if the witness does not reach K within m0 steps.
Subset eta_construct(const GroupHom& f, const Subset& s, const KernelWitness& witness);

/// The explicit bounds for eta on the given families: family_h inside
/// S''_nfg(H)^*, family_g inside S''_nfg(G)^*.  Requires m >= m0.
Report qi_bounds_check(const GroupHom& f, const KernelWitness& witness, std::uint64_t m,
                       const std::vector<Subset>& family_h, const std::vector<Subset>& family_g);

}  // namespace wordmetrics

#endif  // WORDMETRICS_TRANSPORT_HPP_
