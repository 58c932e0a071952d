#ifndef WORDMETRICS_GROUP_HPP_
#define WORDMETRICS_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordmetrics/subset.hpp"

namespace wordmetrics {

/// Thrown when a table, action or map fails one of the group axioms.  The
/// message names the axiom and a witness.
class GroupAxiomError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite group given by its full multiplication table.
///
/// Elements are the indices 0..order-1.  Every built-in constructor puts the
/// identity at index 0; `from_table` accepts any position.
class FiniteGroup {
 public:
  /// Validates the table (closure, associativity, identity, inverses) and
  /// throws GroupAxiomError on the first failure.
  static std::shared_ptr<const FiniteGroup> from_table(std::string name, std::size_t order,
                                                       std::vector<Elem> table);

  /// Builds a group from a table already known to satisfy the axioms (for
  /// example one produced by a product construction or by permutation
  /// closure).  Identity and inverses are still derived and checked.
  static std::shared_ptr<const FiniteGroup> trusted(std::string name, std::size_t order,
                                                    std::vector<Elem> table);

  std::size_t order() const noexcept { return order_; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[a * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  Elem identity() const noexcept { return identity_; }
  /// x^a = a^{-1} x a
  Elem conj(Elem x, Elem a) const noexcept { return mul(mul(inv_[a], x), a); }
  const std::string& name() const noexcept { return name_; }
  std::uint64_t id() const noexcept { return id_; }
  const std::vector<Elem>& table() const noexcept { return table_; }

  Subset empty_set() const { return Subset(id_, order_); }
  Subset full_set() const { return Subset::full(id_, order_); }
  Subset identity_set() const { return Subset(id_, order_, {identity_}); }
  Subset subset(const std::vector<Elem>& elems) const { return Subset(id_, order_, elems); }
  Subset subset(std::initializer_list<Elem> elems) const { return Subset(id_, order_, elems); }
  Subset subset_from_mask(std::uint64_t mask) const { return Subset::from_mask(id_, order_, mask); }
  Subset parse(const std::string& literal) const { return parse_subset(literal, id_, order_); }
  /// Throws std::invalid_argument if `s` is not a subset of this group.
  void require_member(const Subset& s) const;

  std::size_t element_order(Elem x) const;
  bool is_abelian() const;
  /// Conjugacy class of x, as a subset.
  Subset conjugacy_class(Elem x) const;
  /// All conjugacy classes, ordered by smallest element.
  std::vector<Subset> conjugacy_classes() const;

 private:
  FiniteGroup(std::string name, std::size_t order, std::vector<Elem> table);

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  Elem identity_ = 0;
  std::uint64_t id_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Exhaustive axiom scan (associativity is O(n^3)); returns an empty string
/// when all hold, otherwise a description of the first failure.
std::string check_group_axioms(const FiniteGroup& g);

// Standard constructions.  Indexing conventions:
//  cyclic(n):     k  <->  k mod n
//  dihedral(n):   r^i s^j  <->  j*n + i   (order 2n; i < n, j < 2)
//  dicyclic(n):   a^i x^j  <->  j*2n + i  (order 4n; x^2 = a^n, x a x^-1 = a^-1)
//  symmetric(n):  permutations of {0..n-1} in lexicographic order of their
//                 images; the product ab applies a first, then b.
//  alternating(n): the even permutations, same order and product.
//  direct_product(a, b):      (i, j)  <->  i*|b| + j
//  semidirect_product(h,k,α): h*k    <->  h*|K| + k, with
//                 (h1 k1)(h2 k2) = (h1 h2)(α_{h2^-1}(k1) k2)
//                 where α_h(k) = h k h^{-1} is given by action[h][k].
GroupPtr cyclic(std::size_t n);
GroupPtr dihedral(std::size_t n);
GroupPtr dicyclic(std::size_t n);
GroupPtr symmetric(std::size_t n);
GroupPtr alternating(std::size_t n);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr semidirect_product(const GroupPtr& h, const GroupPtr& k,
                            const std::vector<std::vector<Elem>>& action);

/// Default cap on materialized permutation groups (tables are order^2).
inline constexpr std::size_t kMaxPermutationGroupOrder = 2048;

/// The group generated by permutations of {0..degree-1}.  Elements are in
/// breadth-first discovery order starting from the identity; the product ab
/// applies a first, then b.  `elements_out`, when given, receives the
/// permutation of each element index.
GroupPtr permutation_group(std::size_t degree, const std::vector<std::vector<Elem>>& generators,
                           std::string name,
                           std::vector<std::vector<Elem>>* elements_out = nullptr,
                           std::size_t max_order = kMaxPermutationGroupOrder);

/// Brute-force isomorphism search; returns a map a -> b if one exists.
/// Intended for orders up to about 16.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

/// A homomorphism stored as a full element table.
class GroupHom {
 public:
  /// Validates map(xy) = map(x)map(y) exhaustively.
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> map);

  /// Extends generator images by closure; throws GroupAxiomError when the
  /// images are inconsistent or the generators do not generate the source.
  static GroupHom from_generators(GroupPtr source, GroupPtr target,
                                  const std::vector<Elem>& generators,
                                  const std::vector<Elem>& images);
  static GroupHom identity(const GroupPtr& g);

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  Elem operator()(Elem x) const noexcept { return map_[x]; }
  const std::vector<Elem>& map() const noexcept { return map_; }
  bool is_surjective() const;
  /// First target element not in the image, if any.
  std::optional<Elem> uncovered() const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> map_;
};

Subset kernel(const GroupHom& f);

bool is_subgroup(const FiniteGroup& g, const Subset& s);
bool is_normal_subgroup(const FiniteGroup& g, const Subset& s);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};

/// G/N with cosets numbered by their smallest element (so the identity coset
/// is 0).  Throws GroupAxiomError naming a witness when N is not a normal
/// subgroup.
Quotient quotient_by_normal(const GroupPtr& g, const Subset& n);

/// A set-theoretic section g : H -> G of a surjection f : G -> H.
struct Section {
  GroupHom hom;
  std::vector<Elem> map;
  bool symmetric = false;

  Elem operator()(Elem x) const noexcept { return map[x]; }
};

/// With symmetric = false: each x goes to its smallest preimage, except
/// that e goes to e.  With symmetric = true: g(e) = e; each involution
/// gets the smallest involutive preimage (error if none exists); for each
/// pair {x, x^-1} with x < x^-1, g(x) is the smallest preimage of x and
/// g(x^-1) = g(x)^-1.  Throws if f is not surjective.
Section make_section(const GroupHom& f, bool symmetric);

}  // namespace wordmetrics

#endif  // WORDMETRICS_GROUP_HPP_
