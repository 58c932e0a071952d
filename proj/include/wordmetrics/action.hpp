#ifndef WORDMETRICS_ACTION_HPP_
#define WORDMETRICS_ACTION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordmetrics/ext_nat.hpp"
#include "wordmetrics/group.hpp"
#include "wordmetrics/metric.hpp"
#include "wordmetrics/report.hpp"
#include "wordmetrics/star_set.hpp"

namespace wordmetrics {

/// A right action of a finite group on {0..m-1}, stored as an m x |G| table
/// with act(x, a) = xa.
class GroupAction {
 public:
  /// Checks the table range and the action axioms exhaustively; throws
  /// GroupAxiomError naming the first failure.
  GroupAction(GroupPtr group, std::size_t carrier, std::vector<Elem> table, std::string name = {});

  /// G acting on itself by right translation.
  static GroupAction right_translation(const GroupPtr& g);
  /// x a = perm_a(x), where `perms[a]` is the permutation of element a and
  /// the group product ab applies a first.
  static GroupAction from_permutations(const GroupPtr& g,
                                       const std::vector<std::vector<Elem>>& perms,
                                       std::string name = {});

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t carrier() const noexcept { return carrier_; }
  Elem act(Elem x, Elem a) const noexcept { return table_[x * group_->order() + a]; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }
  std::uint64_t id() const noexcept { return id_; }

  Subset point_set(const std::vector<Elem>& points) const {
    return Subset(id_, carrier_, points);
  }
  Subset all_points() const { return Subset::full(id_, carrier_); }

  /// The points {xa | a in G}.
  Subset orbit(Elem x) const;
  /// True when a -> xa is injective.
  bool is_free_at(Elem x) const;

 private:
  GroupPtr group_;
  std::size_t carrier_;
  std::vector<Elem> table_;
  std::string name_;
  std::uint64_t id_;
};

/// d_S^X(x0, .) for every point, by breadth-first search along y -> ys.
std::vector<ExtNat> action_distances_from(const GroupAction& a, const Subset& s, Elem x0);
/// min{n >= 0 | y in x S^n}, or inf.
ExtNat action_word_metric(const GroupAction& a, const Subset& s, Elem x, Elem y);
MetricTable action_metric_table(const GroupAction& a, const Subset& s);
/// x S^{<=n} as a set of points.
Subset action_ball(const GroupAction& a, const Subset& s, Elem x, ExtNat n);

/// The elementary facts for one S: d_S is a nondegenerate asymmetric
/// metric, d_S(x,y) = d_{S^{-1}}(y,x), d_S symmetric when S is, balls are
/// xS^{<=n}, d_S = d_{S u {e}}, d_S(x,.)^{-1}(1) = xS - {x},
/// d_{S^a}(xa,ya) = d_S(x,y), and d_S(xa,ya) = d_S(x,y) for
/// conjugation-invariant S.
Report action_metric_facts(const GroupAction& a, const Subset& s);

/// S in T implies d_S >= d_T pointwise.
Report action_monotonicity_check(const GroupAction& a, const Subset& s, const Subset& t);

/// d_S^X(xa, xb) <= d_S^G(a, b) for all a, b; when a -> xa is injective the
/// two agree.
Report orbit_map_check(const GroupAction& a, const Subset& s, Elem x);

/// The first (a, b) with d_S^X(xa, xb) < d_S^G(a, b), if any.
std::optional<std::pair<Elem, Elem>> orbit_strict_pair(const GroupAction& a, const Subset& s,
                                                       Elem x);

/// d_S^X <= nu_H(S,T) d_T^X pointwise with inf * 0 = 0.  The bound needs
/// T in S(G)^* (T = {e} makes the right side 0 off the diagonal), so other T
/// are reported as skipped.
Report comparison_bound_check(const GroupAction& a, const Subset& s, const Subset& t);

/// For S, T in S(G)^*: lambda(d_T|, d_S|) <= nu_H(S,T) over off-diagonal
/// pairs, with equality when some point is free.  Exhaustive over pairs from
/// `family`.  Throws std::domain_error on a one-point carrier.
Report function_space_embedding_check(const GroupAction& a, const std::vector<Subset>& family);

/// An equivariant map (f, phi): f(xa) = f(x) phi(a), phi an endomorphism.
struct EquivariantMap {
  std::vector<Elem> point;  // f on the carrier
  std::vector<Elem> hom;    // phi on the group

  bool is_invertible() const;
};

/// Throws GroupAxiomError with a witness when phi is not an endomorphism or
/// f is not phi-equivariant.
void validate_equivariant(const GroupAction& a, const EquivariantMap& m);

/// The identity symmetry.
EquivariantMap identity_symmetry(const GroupAction& a);
/// (x -> xu, g -> u^{-1} g u).
EquivariantMap inner_symmetry(const GroupAction& a, Elem u);

/// Closure of `maps` under composition; the composite of u then v is
/// (f_v o f_u, phi_v o phi_u), which is the reversed product u v.
std::vector<EquivariantMap> symmetry_monoid(const GroupAction& a,
                                            const std::vector<EquivariantMap>& maps,
                                            std::size_t cap = 4096);

/// For every u in the monoid generated by `maps`:
/// d_{S^u}(x^u, y^u) <= d_S(x, y), with equality for invertible u; and, when
/// S is invariant under the monoid, d_S(x^u, y^u) <= d_S(x, y) (equality for
/// invertible u).  Maps are validated first.
Report symmetry_monotonicity_check(const GroupAction& a, const std::vector<EquivariantMap>& maps,
                                   const Subset& s);

/// Inn(X) acting on a quandle X.
struct QuandleAction {
  GroupAction action;
  std::vector<std::vector<Elem>> perms;  // permutation of each group element
  std::vector<Elem> sigma;               // group element of sigma_a
  Subset inn_generators;                 // {sigma_a}
  Subset dis_generators;                 // {sigma_a sigma_b^{-1}}
  Subset dis;                            // the subgroup they generate
};

/// Materializes Inn(X) as a permutation group with f.g = g o f and its
/// action x.f = f(x).  Throws StarSetError when X is not a quandle and
/// std::length_error when the carrier exceeds `max_carrier`.
QuandleAction automorphism_action(const StarSet& x, std::size_t max_carrier = 8);

/// For a quandle automorphism h: (h, sigma -> h sigma h^{-1}).  Throws
/// StarSetError if h is not an automorphism.
EquivariantMap quandle_symmetry(const StarSet& x, const QuandleAction& qa,
                                const std::vector<Elem>& h);

/// The automorphisms of a quandle, by brute force over permutations
/// (carrier <= 8).
std::vector<std::vector<Elem>> quandle_automorphisms(const StarSet& x);

}  // namespace wordmetrics

#endif  // WORDMETRICS_ACTION_HPP_
