#ifndef WORDMETRICS_STAR_SET_HPP_
#define WORDMETRICS_STAR_SET_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wordmetrics/ext_nat.hpp"
#include "wordmetrics/group.hpp"
#include "wordmetrics/report.hpp"
#include "wordmetrics/subset.hpp"

namespace wordmetrics {

class StarSetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite carrier {0..m-1} with one to three binary operations, each a
/// row-major m x m table, and an optional two-sided identity shared by all
/// of them.
class StarSet {
 public:
  static constexpr std::size_t kMaxOps = 3;

  /// Validates table shapes and ranges, and the unit laws when `unit` is set.
  StarSet(std::size_t size, std::vector<std::vector<Elem>> ops, std::optional<Elem> unit = {},
          std::string name = {});

  /// The group table as a unital single-operation star-set.
  static StarSet from_group(const FiniteGroup& g);
  /// x * y = 2y - x mod n.
  static StarSet dihedral_quandle(std::size_t n);
  /// x * y = x.
  static StarSet trivial_quandle(std::size_t n);

  std::size_t size() const noexcept { return size_; }
  std::size_t op_count() const noexcept { return ops_.size(); }
  Elem op(std::size_t i, Elem x, Elem y) const noexcept { return ops_[i][x * size_ + y]; }
  const std::vector<std::vector<Elem>>& tables() const noexcept { return ops_; }
  const std::optional<Elem>& unit() const noexcept { return unit_; }
  const std::string& name() const noexcept { return name_; }
  std::uint64_t id() const noexcept { return id_; }

  Subset empty_set() const { return Subset(id_, size_); }
  Subset full_set() const { return Subset::full(id_, size_); }
  Subset subset(const std::vector<Elem>& elems) const { return Subset(id_, size_, elems); }
  Subset parse(const std::string& literal) const { return parse_subset(literal, id_, size_); }
  void require_member(const Subset& s) const;

  /// Empty when X is a quandle (one operation, x * x = x, each right
  /// translation bijective, right self-distributive); otherwise names the
  /// first failed axiom with a witness.
  std::string quandle_violation() const;
  bool is_quandle() const { return quandle_violation().empty(); }

 private:
  std::size_t size_;
  std::vector<std::vector<Elem>> ops_;
  std::optional<Elem> unit_;
  std::string name_;
  std::uint64_t id_;
};

/// A * B over every operation.
Subset star_product(const StarSet& x, const Subset& a, const Subset& b);

/// The generated star-subset <S>: S closed under every operation, with the
/// unit added in the unital case.
Subset star_closure(const StarSet& x, const Subset& s);

/// S^0, S^1, ..., S^n by the inductive rule, memoized per k.  S^0 is {e} in
/// the unital case and empty otherwise (a placeholder, not a power).
std::vector<Subset> star_powers(const StarSet& x, const Subset& s, std::uint64_t n);

/// S^n.  n = inf gives S^infinity = <S>.  Throws std::domain_error for n = 0
/// in a non-unital star-set.
Subset star_power(const StarSet& x, const Subset& s, ExtNat n);
/// S^{<=n}, the union of S^k for 1 <= k <= n (0 <= k in the unital case).
Subset star_power_leq(const StarSet& x, const Subset& s, ExtNat n);

/// nu_S for every element.  Powers are generated until every element of <S>
/// has been seen, so the result is exact.
std::vector<ExtNat> star_word_lengths(const StarSet& x, const Subset& s);
ExtNat star_word_length(const StarSet& x, const Subset& s, Elem e);

/// nu_H(S, T) = sup nu_S(T).  Throws std::domain_error if S or T is empty.
ExtNat star_nu_H(const StarSet& x, const Subset& s, const Subset& t);

enum class StarMetricVariant { all_parenthesizations, left_normed };

/// d_S(x0, .) for every target.  all_parenthesizations uses
/// [x, S, n] = union over k < n of [x, S, k] * S^{n-k}; left_normed uses
/// [x, S, n]' = [x, S, n-1]' * S and stops when that sequence of sets
/// repeats.
std::vector<ExtNat> star_distances_from(const StarSet& x, const Subset& s, Elem x0,
                                        StarMetricVariant variant);
ExtNat star_word_metric(const StarSet& x, const Subset& s, Elem from, Elem to,
                        StarMetricVariant variant);

/// Independent oracle: S^n computed as the set of values of every
/// parenthesized, every-operation product of every word of length n in S.
/// Exponential; meant for n <= 8 on small carriers.
Subset star_power_by_words(const StarSet& x, const Subset& s, std::uint64_t n);

/// Power inclusions S^k * S^l in S^{k+l}, S^{<=k} * S^{<=l} in S^{<=k+l},
/// (S^k)^l in S^{kl} and (S^{<=k})^{<=l} in S^{<=kl} for k, l <= max_kl;
/// subadditivity of nu_S; nu_S^{-1}(1) = S (minus e when unital); and
/// nu_S(x) <= n iff x in S^{<=n}.
Report star_power_facts(const StarSet& x, const Subset& s, std::uint64_t max_kl = 3);

/// nu_H on the given nonempty subsets: nu_H(S,S) = 1, the multiplicative
/// triangle inequality, nu_H(S,T) = 1 iff T in S, and nu_H(S,T) finite
/// whenever T is inside <S>.  In the unital case nu_S(e) = 0, so {e} is
/// left out of the family and "T in S" reads "T in S u {e}".
Report star_nu_H_facts(const StarSet& x, const std::vector<Subset>& family);

/// d_S and d'_S are nondegenerate asymmetric metrics, and d_S <= d'_S.
Report star_metric_facts(const StarSet& x, const Subset& s);

/// The first pair (x, y), in row-major order, with d_S(x,y) < d'_S(x,y).
std::optional<std::pair<Elem, Elem>> strict_metric_pair(const StarSet& x, const Subset& s);

/// Endomorphisms R acting on X through an anti-homomorphism: x^a = f_a(x).
/// `compose`, when present, is the operation of R as a table over indices
/// of `maps` and must satisfy f_{a*b} = f_b o f_a.  Without it, R is the
/// closure of `maps` under composition (no identity is added), which
/// satisfies that identity by construction.
struct StarSymmetry {
  std::vector<std::vector<Elem>> maps;
  std::optional<std::vector<std::vector<std::size_t>>> compose;
};

/// Throws StarSetError with a witness if some map is not a star
/// endomorphism or the composition table is not anti-homomorphic.
void validate_symmetry(const StarSet& x, const StarSymmetry& r);

/// r.maps itself when a composition table is given, otherwise its closure
/// under composition.  Throws std::length_error past `cap` maps.
std::vector<std::vector<Elem>> symmetry_closure(const StarSet& x, const StarSymmetry& r,
                                                std::size_t cap = 40320);

/// S^R = {x^a | x in S, a in R}.
Subset act_on_set(const std::vector<std::vector<Elem>>& r, const Subset& s);

/// The invariance facts for S: (S^n)^a = (S^a)^n, <S>^a = <S^a>,
/// S^R invariant and S u S^R invariant; and, for the invariant set
/// S0 = S (if invariant) or S u S^R, nu_{S0}(x^a) <= nu_{S0}(x) and
/// nu_H(S0, T^R) <= nu_H(S0, T u T^R) = nu_H(S0, T) over every nonempty T
/// (carrier <= 10) or `samples` random ones.
Report phi_invariance_suite(const StarSet& x, const StarSymmetry& r, const Subset& s,
                            std::size_t samples = 256, std::uint64_t seed = 0);

/// The family of generating sets of the form F^R or F u F^R over every
/// nonempty F (carrier <= 12): each member is invariant and generates X,
/// and nu_H(S, T) is finite for all S, T in the family.
Report phi_fg_family_check(const StarSet& x, const StarSymmetry& r);

}  // namespace wordmetrics

#endif  // WORDMETRICS_STAR_SET_HPP_
